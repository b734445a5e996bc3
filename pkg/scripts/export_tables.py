#!/usr/bin/env python3
"""Export the JSON artifacts (quivers, multiplication tables, per-pair
complexes, sample word liftings) for a range of strand counts.

Usage: python scripts/export_tables.py [--max-n N] [--out DIR]
"""

import argparse
import pathlib
import sys

from cliffcat import cli


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--out", default="exports")
    args = ap.parse_args()

    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for n in range(1, args.max_n + 1):
        code = cli.main(["export-all", "--n", str(n), "--out", str(out)])
        if code != 0:
            return code
        print(f"n={n}: wrote artifacts to {out}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
