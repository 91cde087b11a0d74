#!/usr/bin/env python3
"""Timing comparison of the compiled eigensolver kernels against the pure
NumPy fallback.

Both backends implement the same two entry points (implicit-shift QL on a
symmetric tridiagonal, and Householder reduction of a dense symmetric matrix
followed by QL), so the comparison runs each on identical inputs.

Usage::

    python3 benchmarks/bench_kernels.py [--sizes 100,200,400,800] [--repeat 5]
"""

import argparse
import time

import numpy as np

from cwglt import ModelParams, cw_restricted
from cwglt import _eigen_py

try:
    from cwglt import _eigen_cy
except ImportError:
    _eigen_cy = None


def _best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_tridiag(backend, n, repeat):
    m = cw_restricted(n - 1, ModelParams())
    d = np.ascontiguousarray(m.diag, dtype=float)
    e = np.ascontiguousarray(m.offdiag, dtype=float)
    return _best_of(lambda: backend.tridiag_eigvals(d.copy(), e.copy()), repeat)


def bench_dense(backend, n, repeat):
    rng = np.random.default_rng(5)
    a = rng.standard_normal((n, n))
    a = np.ascontiguousarray(a + a.T)

    def run():
        d, e = backend.dense_sym_tridiagonalize(a.copy())
        backend.tridiag_eigvals(d, e)

    return _best_of(run, repeat)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="100,200,400,800",
                        help="comma-separated matrix dimensions")
    parser.add_argument("--repeat", type=int, default=5,
                        help="repetitions per measurement (best-of)")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if _eigen_cy is None:
        print("compiled backend unavailable; timing pure backend only")
    backends = [("pure", _eigen_py)]
    if _eigen_cy is not None:
        backends.insert(0, ("compiled", _eigen_cy))

    print(f"{'kernel':<10} {'n':>6} " +
          " ".join(f"{name:>12}" for name, _ in backends) +
          ("      speedup" if len(backends) == 2 else ""))
    for kernel, bench in (("tridiag", bench_tridiag), ("dense", bench_dense)):
        for n in sizes:
            if kernel == "dense" and n > 1200:
                continue
            times = [bench(backend, n, args.repeat) for _, backend in backends]
            row = f"{kernel:<10} {n:>6} " + " ".join(f"{t * 1e3:>10.2f}ms" for t in times)
            if len(times) == 2:
                row += f"  {times[1] / times[0]:>10.1f}x"
            print(row)


if __name__ == "__main__":
    main()