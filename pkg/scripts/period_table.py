#!/usr/bin/env python3
"""Print the normalizing-factor monomial across a small parameter grid.

Usage: python scripts/period_table.py [--n-max N] [--kappa-max N] [--d N]
"""

import argparse

from cmperiods.periods import normalizing_factor_closed, normalizing_factor_product


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=6)
    parser.add_argument("--kappa-max", type=int, default=2)
    parser.add_argument("--d", type=int, default=1)
    args = parser.parse_args()

    for n in range(1, args.n_max + 1):
        for kappa in range(0, args.kappa_max + 1):
            m = n + 1
            closed = normalizing_factor_closed(n, m, kappa, args.d)
            product = normalizing_factor_product(n, m, kappa, args.d)
            mark = "==" if closed == product else "!! MISMATCH"
            print(f"n={n} m={m} kappa={kappa} d={args.d}  {mark}")
            print(f"    {closed.describe()}")


if __name__ == "__main__":
    main()
