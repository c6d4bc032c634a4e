"""Time the pure-Python and compiled kernels on random quasi graphs and lists.

    python3 benchmarks/bench_kernels.py [--sizes 50 100 150] [--repeat 3]
"""
import argparse
import time

import numpy as np

from extfuzzy._backend import BACKENDS
from extfuzzy.relations import QUASI


def random_graph(rng, n, density=0.3):
    base = rng.uniform(1, 100, (n, n))
    left = rng.uniform(0, 10, (n, n))
    right = rng.uniform(0, 10, (n, n))
    reach = (rng.random((n, n)) < density).astype(np.uint8)
    return base, left, right, reach


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 150])
    ap.add_argument("--sort-sizes", type=int, nargs="+", default=[500, 2000])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--xi", type=float, default=0.3)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    names = sorted(BACKENDS)
    if "cython" not in BACKENDS:
        print("compiled extension not built; timing the Python kernels only")

    print(f"{'kernel':<16}{'n':>6}" + "".join(f"{n + ' s':>12}" for n in names) + f"{'speedup':>10}")
    for n in args.sizes:
        g = random_graph(rng, n)
        t = {name: best_of(lambda: BACKENDS[name].floyd_warshall(QUASI, 0.0, *g, args.xi), args.repeat)
             for name in names}
        _row("floyd_warshall", n, names, t)
    for n in args.sort_sizes:
        base = rng.uniform(-50, 50, n)
        left = rng.uniform(0, 5, n)
        right = rng.uniform(0, 5, n)
        t = {name: best_of(lambda: BACKENDS[name].insertion_sort(QUASI, 0.0, base, left, right, args.xi),
                           args.repeat)
             for name in names}
        _row("insertion_sort", n, names, t)


def _row(kernel, n, names, t):
    speed = f"{t['python'] / t['cython']:>9.1f}x" if "cython" in t else f"{'-':>10}"
    print(f"{kernel:<16}{n:>6}" + "".join(f"{t[name]:>12.4f}" for name in names) + speed)


if __name__ == "__main__":
    main()
