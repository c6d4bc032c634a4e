from importlib import resources

import pytest

from extfuzzy import parse_graph
from extfuzzy._backend import BACKENDS

DATA = resources.files("extfuzzy") / "data"


def load_graph(name):
    return parse_graph((DATA / name).read_bytes())


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    return request.param


@pytest.fixture
def example1():
    return load_graph("example1.graph")


@pytest.fixture
def example2():
    return load_graph("example2.graph")


@pytest.fixture
def example3():
    return load_graph("example3.graph")


# criterion number -> list of (label, ok, detail), filled by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        checks = ACCEPTANCE[num]
        failed = [f"{label} ({detail})" if detail else label for label, ok, detail in checks if not ok]
        verdict = "FAIL" if failed else "PASS"
        line = f"criterion {num}: {verdict}  {len(checks) - len(failed)}/{len(checks)} checks"
        if failed:
            line += "; failing: " + "; ".join(failed)
        terminalreporter.write_line(line)
