#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallbacks.

Times the power-series prefix recurrence (the per-prime hot loop), the
inverse table, and the F_p / F_{p^2} counting passes on both backends, plus
the end-to-end per-prime record cost on the default backend.

Usage: python benchmarks/bench_kernels.py [--primes 4093 65537 1048583]
"""

import argparse
import time

from picard_lpoly import kernels, pipeline
from picard_lpoly.curve import PicardCurve
from picard_lpoly.oracle import ExtField


def timeit(fn, min_time=0.2):
    reps = 0
    t0 = time.perf_counter()
    while True:
        fn()
        reps += 1
        dt = time.perf_counter() - t0
        if dt >= min_time and reps >= 3:
            return dt / reps


def bench_prefix(p, backend):
    ker = kernels.get(backend)
    fc = [1, 1, 0, 0, 1]
    n = (2 * p - 2) // 3 if p % 3 == 1 else (2 * p - 1) // 3
    inv = ker.inverse_table(p - 1, p)
    return timeit(lambda: ker.pow_series_prefix(fc, n, p - 1, p, inv))


def bench_inverse_table(p, backend):
    ker = kernels.get(backend)
    return timeit(lambda: ker.inverse_table(p - 1, p))


def bench_fp_counts(p, backend):
    if p % 3 != 1:
        return None
    ker = kernels.get(backend)
    cls = ker.cube_class_table(p)
    return timeit(lambda: ker.fp_char_counts([1, 1, 0, 0, 1], p, cls))


def bench_fp2_counts(p, backend):
    if p % 3 != 1 or p > 1500:
        return None
    ker = kernels.get(backend)
    cls = ker.cube_class_table(p)
    m = ExtField(p, 2).modulus
    return timeit(
        lambda: ker.fp2_char_counts(0, 1, 1, p, cls, m[0], m[1]), min_time=0.05
    )


def fmt(seconds):
    if seconds is None:
        return "-"
    if seconds < 1e-3:
        return f"{seconds * 1e6:8.1f} us"
    if seconds < 1.0:
        return f"{seconds * 1e3:8.2f} ms"
    return f"{seconds:8.2f} s "


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--primes", type=int, nargs="+",
                    default=[1009, 65537, 1048583])
    args = ap.parse_args()

    backends = kernels.available_backends()
    print(f"available backends: {', '.join(backends)} "
          f"(default {kernels.default_backend()})")
    rows = [
        ("series prefix to p-1", bench_prefix),
        ("inverse table", bench_inverse_table),
        ("F_p char counts", bench_fp_counts),
        ("F_p^2 char counts", bench_fp2_counts),
    ]
    for p in args.primes:
        print(f"\np = {p}")
        for label, fn in rows:
            cells = []
            for be in backends:
                try:
                    cells.append(fmt(fn(p, be)))
                except ValueError:
                    cells.append("   (n/a)")
            joined = "  ".join(f"{be}: {cell}" for be, cell in zip(backends, cells))
            print(f"  {label:<22} {joined}")

    print("\nend-to-end record (default backend):")
    curve = PicardCurve(0, 1, 1)
    for p in args.primes:
        if curve.disc % p == 0:
            continue
        dt = timeit(lambda: pipeline.compute_record(curve, p), min_time=0.3)
        print(f"  p = {p:<9} {fmt(dt)}")


if __name__ == "__main__":
    main()
