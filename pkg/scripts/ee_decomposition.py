#!/usr/bin/env python3
"""Print the decomposition of the lifted two-letter words EE and FF.

The lifted complex of a repeated raising (or lowering) letter splits as a
direct sum of indecomposable projectives with zero differential, one pair of
slices, so its class in K0 vanishes.  This script prints the summands per
cohomological position so the splitting can be eyeballed for small n.

Usage: python scripts/ee_decomposition.py [--max-n N]
"""

import argparse
import sys
from collections import defaultdict

from cliffcat import catun as cu
from cliffcat import vertices as vx
import cliffcat.complexes as cx


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()

    for n in range(1, args.max_n + 1):
        for name in ("EE", "FF"):
            word = cu.Word((name[0], name[0]))
            c = cu.lift_word(n, word)
            by_slice = defaultdict(list)
            for s in c.summands:
                by_slice[s.cohshift].append((vx.fmt(s.vertex), s.qshift))
            print(f"n={n} {name}: {len(c.summands)} summands, "
                  f"{len(c.delta)} differential entries, k0={cx.k0_class(c)}")
            for k in sorted(by_slice):
                parts = " + ".join(f"P({v}){{{q}}}" for v, q in sorted(by_slice[k]))
                print(f"    position {k}: {parts}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
