#!/usr/bin/env python3
"""Reproduce the network-calculus service-curve experiment.

For each grid size N the sextic input-rate fit is discretized on
[0, T_max], convolved (min-plus) with the minimum service curve
beta(T) = T and the maximum service curve gamma(T) = max(0, T - 3), and
compared against a quadratic brute-force oracle.  A timing table then
benchmarks the quasi-linear FFT pipeline against the brute force.
"""

import argparse
import math
import pathlib
import time

import numpy as np

from smoothmax import (
    CurveGrid,
    SERVICE_CURVE_FIT,
    discretize,
    maxconv_float,
    service_bounds,
)


def brute_minplus_grid(x, y):
    x = np.asarray(x, float)
    y = np.asarray(y, float)
    out = np.empty(len(x))
    for k in range(len(x)):
        out[k] = np.min(x[: k + 1] + y[k::-1])
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="results", type=pathlib.Path)
    ap.add_argument("--t-max", type=float, default=6.0)
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 100])
    ap.add_argument("--timing-sizes", type=int, nargs="+",
                    default=[100, 1000, 5000])
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    for N in args.sizes:
        R = discretize(SERVICE_CURVE_FIT, args.t_max, N)
        beta = CurveGrid(R.times, R.times)
        gamma = CurveGrid(R.times,
                          tuple(max(0.0, t - 3.0) for t in R.times))
        lower, upper = service_bounds(R, beta, gamma)
        path = args.out_dir / f"service_bounds_N{N}.csv"
        with open(path, "w") as fh:
            fh.write("T,lower,upper\n")
            for t, lo, hi in zip(R.times, lower.values, upper.values):
                fh.write(f"{t!r},{lo!r},{hi!r}\n")
        err_lo = np.asarray(lower.values) - brute_minplus_grid(R.values,
                                                               beta.values)
        err_hi = np.asarray(upper.values) - brute_minplus_grid(R.values,
                                                               gamma.values)
        print(f"N={N:5d}  wrote {path}")
        print(f"         lower error in [{err_lo.min():.2e}, {err_lo.max():.2e}]")
        print(f"         upper error in [{err_hi.min():.2e}, {err_hi.max():.2e}]")

    print("\ntiming: quasi-linear FFT pipeline vs quadratic brute force")
    rng = np.random.default_rng(11)
    print(f"{'N':>6} {'fft_ms':>10} {'brute_ms':>10} {'speedup':>8}")
    for N in args.timing_sizes:
        x = rng.uniform(0.0, 1.0, N)
        y = rng.uniform(0.0, 1.0, N)
        best_fast = best_brute = float("inf")
        for _ in range(3):
            t0 = time.perf_counter()
            maxconv_float(list(-x), list(-y), t=math.e, method="fft")
            best_fast = min(best_fast, time.perf_counter() - t0)
            t0 = time.perf_counter()
            brute_minplus_grid(np.concatenate([x, np.full(N - 1, np.inf)]),
                               np.concatenate([y, np.full(N - 1, np.inf)]))
            best_brute = min(best_brute, time.perf_counter() - t0)
        print(f"{N:>6} {best_fast * 1e3:>10.2f} {best_brute * 1e3:>10.2f} "
              f"{best_brute / best_fast:>8.1f}")


if __name__ == "__main__":
    main()
