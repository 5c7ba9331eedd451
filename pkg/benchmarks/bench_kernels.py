#!/usr/bin/env python3
"""Benchmark the compiled batch kernel against the numpy fallback.

Times `surface_grid` (positions + both curvature variants per sample) for
each available backend on the same point set and reports throughput and
speedup.  Outputs are cross-checked before timing so the numbers compare
identical work.

Usage: python benchmarks/bench_kernels.py [--points N] [--repeats R]
"""

import argparse
import math
import time

import numpy as np

from coralgeo._kernels import available_backends
from coralgeo._pykernels import KIND_LETTUCE, KIND_POLAR


def best_time(fn, repeats):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=1_000_000)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(42)
    u = rng.uniform(0.0, 2.0, args.points)
    v = rng.uniform(0.0, 2.0 * math.pi, args.points)

    backends = available_backends()
    if "compiled" not in backends:
        print("note: compiled extension not built; timing the numpy fallback only")

    cases = [("coral n=4", KIND_POLAR, 4), ("lettuce n=4", KIND_LETTUCE, 4)]
    for label, kind, n in cases:
        results = {name: mod.surface_grid(kind, n, u, v)
                   for name, mod in backends.items()}
        if len(results) == 2:
            for a, b in zip(results["compiled"], results["numpy"]):
                np.testing.assert_allclose(a, b, rtol=1e-12, atol=1e-12, equal_nan=True)

        print(f"\n{label}, {args.points:,} samples, best of {args.repeats}:")
        times = {}
        for name, mod in backends.items():
            times[name] = best_time(lambda m=mod: m.surface_grid(kind, n, u, v),
                                    args.repeats)
            rate = args.points / times[name] / 1e6
            print(f"  {name:<9} {times[name] * 1e3:8.1f} ms   {rate:6.1f} Msamples/s")
        if len(times) == 2:
            print(f"  speedup   {times['numpy'] / times['compiled']:.2f}x (compiled vs numpy)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
