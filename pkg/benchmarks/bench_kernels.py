#!/usr/bin/env python3
"""Time the numba kernels against their pure-numpy fallbacks.

Usage:
    python benchmarks/bench_kernels.py [--points N] [--degree D] [--repeats R]

Each kernel is warmed once (JIT compile) and then timed best-of-R on a
sweep-sized grid.  Run without CHEBBOUND_NO_NUMBA so both paths exist.
"""

import argparse
import time

import numpy as np

from chebbound import _kernels
from chebbound.expseries import exp_cheb_coefficients


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=2_000_000)
    parser.add_argument("--degree", type=int, default=32)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    xs = np.linspace(-5.0, -1.01, args.points)
    coeffs = exp_cheb_coefficients(args.degree)
    n = args.degree

    cases = [
        ("clenshaw", lambda f: f(coeffs, xs), _kernels.clenshaw_np,
         _kernels.clenshaw_nb if _kernels.HAS_NUMBA else None),
        ("cheb_t", lambda f: f(n, xs), _kernels.cheb_t_np,
         _kernels.cheb_t_nb if _kernels.HAS_NUMBA else None),
        ("cheb_u", lambda f: f(n, xs), _kernels.cheb_u_np,
         _kernels.cheb_u_nb if _kernels.HAS_NUMBA else None),
        ("taylor", lambda f: f(n, xs), _kernels.taylor_np,
         _kernels.taylor_nb if _kernels.HAS_NUMBA else None),
    ]

    print(f"points={args.points} degree={args.degree} repeats={args.repeats} "
          f"backend={_kernels.BACKEND}")
    print(f"{'kernel':<10} {'numpy [ms]':>12} {'numba [ms]':>12} {'speedup':>9}")
    for name, call, np_fn, nb_fn in cases:
        t_np = best_of(lambda: call(np_fn), args.repeats)
        if nb_fn is None:
            print(f"{name:<10} {t_np * 1e3:>12.2f} {'n/a':>12} {'n/a':>9}")
            continue
        call(nb_fn)  # warm the JIT outside the timer
        t_nb = best_of(lambda: call(nb_fn), args.repeats)
        print(f"{name:<10} {t_np * 1e3:>12.2f} {t_nb * 1e3:>12.2f} {t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
