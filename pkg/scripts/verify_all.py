#!/usr/bin/env python3
"""Run every verification suite at its default bound and print a summary table.

Usage: python scripts/verify_all.py [--n N] [--seed S]
Exit status is 1 if any suite reports failures.
"""

import argparse
import sys

from cliffcat import cli


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=5, help="strand bound (capped per suite)")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    bad = 0
    for suite in cli.SUITES:
        rep = cli.run_suite(suite, args.n, args.seed)
        status = "ok" if rep.ok else f"FAIL ({len(rep.failures)})"
        print(f"{suite:10s} n={rep.n}  {rep.checks:8d} checks  {rep.seconds:6.2f}s  {status}")
        for f in rep.failures[:5]:
            print(f"    {f}")
        bad += not rep.ok
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
