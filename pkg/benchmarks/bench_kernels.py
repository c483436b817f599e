#!/usr/bin/env python3
"""Benchmark the compiled kernel backend against the pure-numpy fallback.

Times the four hot kernels on realistic workloads (oracle-sized member
batches) and prints one table row per (kernel, size) with both timings
and the speedup. Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeats 7] [--seed 0]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from kharibound import available_backends
from kharibound.kernels import (
    eval_jomega_batch,
    min_ratio_re_outer,
    min_ratio_re_paired,
    routh_stable_batch,
)


def _best_time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _workloads(rng):
    """(label, callable-factory) pairs; each factory binds one backend."""
    cases = []

    for n, width in ((2_000, 6), (50_000, 8)):
        coeffs = rng.uniform(-2.0, 2.0, size=(n, width))
        cases.append(
            (
                f"eval_jomega_batch   {n:>6} x {width}",
                lambda impl, c=coeffs: eval_jomega_batch(c, 0.73, impl=impl),
            )
        )

    for n in (512, 2_048):
        gv = rng.normal(size=n) + 1j * rng.normal(size=n)
        fv = rng.normal(size=n) + 1j * rng.normal(size=n) + 3.0
        cases.append(
            (
                f"min_ratio_re_outer  {n:>6} x {n}",
                lambda impl, g=gv, f=fv: min_ratio_re_outer(g, f, impl=impl),
            )
        )

    n = 200_000
    gv = rng.normal(size=n) + 1j * rng.normal(size=n)
    fv = rng.normal(size=n) + 1j * rng.normal(size=n) + 3.0
    cases.append(
        (
            f"min_ratio_re_paired {n:>6}",
            lambda impl, g=gv, f=fv: min_ratio_re_paired(g, f, impl=impl),
        )
    )

    for n, width in ((5_000, 5), (20_000, 7)):
        rows = np.abs(rng.normal(size=(n, width))) + 0.1
        cases.append(
            (
                f"routh_stable_batch  {n:>6} x {width}",
                lambda impl, c=rows: routh_stable_batch(c, impl=impl),
            )
        )

    return cases


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=7, help="timing repeats, best-of")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    backends = available_backends()
    print(f"available backends: {', '.join(backends)}")
    if "cython" not in backends:
        print("compiled backend not importable; timing the python backend only")

    rng = np.random.default_rng(args.seed)
    cases = _workloads(rng)

    header = f"{'kernel / workload':<30} {'python':>12} {'cython':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label, factory in cases:
        factory("python")  # warm both paths before timing
        t_py = _best_time(lambda: factory("python"), args.repeats)
        if "cython" in backends:
            factory("cython")
            t_cy = _best_time(lambda: factory("cython"), args.repeats)
            ratio = t_py / t_cy if t_cy > 0 else float("inf")
            print(f"{label:<30} {t_py * 1e3:>10.3f}ms {t_cy * 1e3:>10.3f}ms {ratio:>8.1f}x")
        else:
            print(f"{label:<30} {t_py * 1e3:>10.3f}ms {'-':>12} {'-':>9}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
