"""Time the compiled oracle kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--group 4 2 4] [--repeat 3]
"""

import argparse
import importlib
import time

import numpy as np

from milnorchi.oracle import _kernels_py
from milnorchi.oracle.brute import MonomialGroup


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--group", nargs=3, type=int, default=(4, 2, 4), metavar=("R", "P", "L"))
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    r, p, l = args.group
    G = MonomialGroup(r, p, l, cap=10**7)
    P, E, D = G.P, G.E, G.eigen_denominator
    h = G.order // 3
    try:
        ext = importlib.import_module("milnorchi.oracle._kernels")
    except ImportError:
        ext = None
        print("compiled kernels not built; timing the fallback only")

    jobs = {
        "encode": lambda m: m.encode(P, E, r),
        "conjugate_keys": lambda m: m.conjugate_keys(P, E, r, P[h], E[h]),
        "commutes": lambda m: m.commutes(P, E, r, P[h], E[h]),
        "multiply_keys": lambda m: m.multiply_keys(P, E, r, P[h], E[h]),
        "regular_spectra": lambda m: m.regular_spectra(P, E, r, p < r, D),
    }
    print(f"G({r},{p},{l}): {G.order} elements, best of {args.repeat}")
    print(f"{'kernel':<16} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, job in jobs.items():
        py = best_of(lambda: job(_kernels_py), args.repeat)
        if ext is None:
            print(f"{name:<16} {py:>10.4f} {'-':>10} {'-':>8}")
            continue
        cy = best_of(lambda: job(ext), args.repeat)
        a, b = job(_kernels_py), job(ext)
        same = all(np.array_equal(x, y) for x, y in zip(a, b)) if isinstance(a, tuple) else np.array_equal(a, b)
        if not same:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<16} {py:>10.4f} {cy:>10.4f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
