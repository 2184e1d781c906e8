#!/usr/bin/env python3
"""Run the acceptance suite and print one PASS/FAIL line per criterion.

Usage: python scripts/run_verification.py [--samples N] [--seed S] [--json report.json]
"""
import argparse
import json
import sys

from centress.verify import VerifyConfig, verify_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=VerifyConfig.samples)
    ap.add_argument("--seed", type=int, default=VerifyConfig.seed)
    ap.add_argument("--json", help="also write the per-criterion summary here")
    args = ap.parse_args()
    results = verify_all(VerifyConfig(seed=args.seed, samples=args.samples),
                         report=lambda r: print(r.line(), flush=True))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([r.to_json() for r in results], fh, indent=2)
    return 0 if all(r.ok for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
