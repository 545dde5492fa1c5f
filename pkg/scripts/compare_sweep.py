#!/usr/bin/env python3
"""Sweep the automorphic-motivic comparator over seeded random instances.

Usage: python scripts/compare_sweep.py [--seed N] [--count N] [--level q|fgal]
"""

import argparse
import time

from cmperiods.periods import Level
from cmperiods.sweeps import (
    SweepBounds,
    run_compare_sweep,
    run_bounds_sweep,
    run_equivariance_sweep,
    run_signature_sweep,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=20260808)
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--level", choices=["q", "fgal"], default="fgal")
    parser.add_argument("--no-tate", action="store_true")
    args = parser.parse_args()

    level = Level.FGAL if args.level == "fgal" else Level.Q
    bounds = SweepBounds()
    runs = [
        ("compare", lambda: run_compare_sweep(args.seed, args.count, bounds, level, not args.no_tate)),
        ("bounds", lambda: run_bounds_sweep(args.seed, args.count, bounds)),
        ("signature", lambda: run_signature_sweep(args.seed, args.count, bounds)),
        ("equivariance", lambda: run_equivariance_sweep(args.seed, max(1, args.count // 10), bounds, level)),
    ]
    for name, run in runs:
        started = time.perf_counter()
        stats = run()
        elapsed = time.perf_counter() - started
        status = "ok" if stats.ok else f"{len(stats.failures)} FAILURES"
        print(
            f"{name:12s} instances={stats.instances:5d} points={stats.points_checked:5d} "
            f"vacuous={stats.vacuous:4d} [{status}] {elapsed:.2f}s"
        )
        for line in stats.failures[:5]:
            print(f"    {line}")


if __name__ == "__main__":
    main()
