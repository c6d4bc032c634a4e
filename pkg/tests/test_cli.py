import io
from contextlib import nullcontext
import subprocess
import sys

import pytest

from extfuzzy.cli import format_cost, main
from extfuzzy import parse_efn

from conftest import DATA


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), stdout=out)
    return code, out.getvalue()


def rows(text):
    return [line.split("\t") for line in text.splitlines()]


def test_compare_triangular():
    code, out = run(["compare", "0@tri(1)", "2@tri(3)"])
    assert code == 0
    assert out.splitlines() == ["eq=0.333333", "lt=0.666667", "leq=1", "gt=0", "geq=0.333333"]


def test_compare_identical():
    _, out = run(["compare", "4@quasi(1,2)", "4@quasi(1,2)"])
    assert out.splitlines() == ["eq=1", "lt=0", "leq=1", "gt=0", "geq=1"]


def test_compare_gaussian():
    _, out = run(["compare", "0@gauss(1)", "2@gauss(3)"])
    assert out.splitlines()[0] == "eq=0.800737"


def test_shortest_paths_example1():
    code, out = run(["shortest-paths", str(DATA / "example1.graph"), "--source", "1", "--xi", "0.3"])
    assert code == 0
    lines = out.splitlines()
    assert "11\t(902; 22, 50)\t1 -> 9 -> 7 -> 11" in lines
    assert [r[0] for r in rows(out)] == [str(d) for d in range(2, 12)]


def test_shortest_paths_stdin():
    text = (DATA / "example2.graph").read_text()
    _, out = run(["shortest-paths", "-", "--source", "1", "--xi", "0.3"], stdin=text)
    assert "6\t(14; 1, 1)\t1 -> 2 -> 4 -> 5 -> 6" in out.splitlines()


def test_shortest_paths_unreachable():
    _, out = run(["shortest-paths", "-", "--source", "1", "--xi", "0.7"], stdin="nodes 2\nfamily gauss\n")
    assert out == "2\tunreachable\n"


def test_format_cost():
    assert format_cost(parse_efn("902@quasi(22,50)")) == "(902; 22, 50)"
    assert format_cost(parse_efn("2.5@trap(1,0.5)")) == "(2.5; 1, 0.5)"


def test_sort_file_and_inline():
    _, out = run(["sort", str(DATA / "gaussian8.efn"), "--xi", "0.9"])
    assert out.splitlines() == [
        "-4.3@gauss(1)", "5.5@gauss(0.5)", "6@gauss(3)", "4.5@gauss(1)",
        "0.4@gauss(2)", "5.6@gauss(1)", "4.2@gauss(1.5)", "7.7@gauss(1)",
    ]
    _, out = run(["sort", str(DATA / "gaussian8.efn")])
    assert [parse_efn(s).base for s in out.splitlines()] == [-4.3, 0.4, 4.2, 4.5, 5.5, 5.6, 6, 7.7]
    assert run(["sort", "3@tri(1)"])[1] == "3@tri(1)\n"
    assert run(["sort", "3@tri(1)", "1@tri(2)"])[1] == "1@tri(2)\n3@tri(1)\n"


def test_sort_stdin():
    _, out = run(["sort", "-", "--xi", "0"], stdin="# two\n2@expabs(1)\n\n1@expabs(1)\n")
    assert out == "1@expabs(1)\n2@expabs(1)\n"


def test_sweep():
    _, out = run(["sweep", "70", "80", "--family", "gauss", "--family", "tri", "--params", "20"])
    header, row = rows(out)
    assert header == ["p", "gauss", "tri"]
    assert row[0] == "20"
    assert abs(float(row[1]) - 0.8825) < 1e-3
    assert float(row[2]) == 0.5


def test_sweep_equal_bases_and_default_families():
    _, out = run(["sweep", "5", "5", "--params", "1,10,100"])
    table = rows(out)
    assert table[0] == ["p", "tri", "trap", "gauss", "expabs"]
    assert all(v == "1" for r in table[1:] for v in r[1:])


@pytest.mark.parametrize(
    "argv,stdin,code",
    [
        (["compare", "0@tri(1)"], "", 2),
        (["compare", "0@tri(1)", "2@gauss(1)"], "", 1),
        (["compare", "0@tri(-1)", "2@tri(1)"], "", 1),
        (["compare", "zero", "2@tri(1)"], "", 1),
        (["sort", "1@tri(1)", "--xi", "1"], "", 2),
        (["sort", "1@tri(1)", "--xi", "abc"], "", 2),
        (["shortest-paths", "-", "--source", "3", "--xi", "0.3"], "nodes 2\nfamily tri\n", 1),
        (["shortest-paths", "-", "--xi", "0.3"], "nodes 2\nfamily tri\n", 2),
        (["shortest-paths", "-", "--source", "1", "--xi", "0.3"], "nodes 2\nfamily tri\nedge 1 2 x 1\n", 1),
        (["shortest-paths", "/nonexistent/g", "--source", "1", "--xi", "0.3"], "", 1),
        (["sweep", "1", "2", "--params", "1,-3"], "", 1),
        (["sweep", "1", "2", "--family", "quasi", "--params", "1"], "", 2),
        (["frobnicate"], "", 2),
    ],
)
def test_failures_exit_nonzero_with_one_line(argv, stdin, code, capsys):
    with pytest.raises(SystemExit) if code == 2 else nullcontext() as info:
        got = main(argv, stdin=io.StringIO(stdin), stdout=io.StringIO())
    if code == 2:
        assert info.value.code == 2
    else:
        assert got == 1
    err = capsys.readouterr().err
    assert err.endswith("\n")
    assert err.count("\n") == 1
    assert err.startswith("extfuzzy")


def test_parse_error_mentions_line(capsys):
    main(["shortest-paths", "-", "--source", "1", "--xi", "0.3"],
         stdin=io.StringIO("nodes 2\nfamily tri\nedge 1 2 x 1\n"), stdout=io.StringIO())
    assert "line 3" in capsys.readouterr().err


def test_console_entry_is_deterministic():
    argv = [sys.executable, "-m", "extfuzzy", "shortest-paths", str(DATA / "example1.graph"),
            "--source", "1", "--xi", "0.3"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first
