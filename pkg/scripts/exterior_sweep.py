#!/usr/bin/env python3
"""Tabulate the centrally essential property of exterior algebras over F_p.

For each d the socle criterion decides; for small d the exhaustive
definition is run as well and the two verdicts are printed side by side.

Usage: python scripts/exterior_sweep.py [--p 3] [--max-d 6] [--exhaustive-max-d 3]
"""
import argparse
import time

from centress.constructions import exterior_algebra
from centress.finalg import center, centrally_essential_exhaustive, centrally_essential_socle


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--max-d", type=int, default=6)
    ap.add_argument("--exhaustive-max-d", type=int, default=3)
    args = ap.parse_args()
    print(f"{'d':>2} {'dim':>4} {'dim C':>6} {'socle':>8} {'exhaustive':>11} {'seconds':>8}")
    for d in range(1, args.max_d + 1):
        start = time.perf_counter()
        A = exterior_algebra(args.p, d)
        socle = centrally_essential_socle(A).verdict.value
        exhaustive = "-"
        if d <= args.exhaustive_max_d:
            exhaustive = centrally_essential_exhaustive(A).verdict.value
        print(f"{d:>2} {A.dim:>4} {center(A).rank:>6} {socle:>8} {exhaustive:>11} "
              f"{time.perf_counter() - start:>8.2f}")


if __name__ == "__main__":
    main()
