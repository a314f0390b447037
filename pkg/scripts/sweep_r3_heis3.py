"""Sweep the R^3 ⋈ heis3 family over a rational grid and tabulate flatness and type."""

import argparse
import sys
from fractions import Fraction

from bornforge.cli import Report
from bornforge.tables import sweep_r3_heis3


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=Fraction, default=Fraction(-3))
    ap.add_argument("--hi", type=Fraction, default=Fraction(1))
    ap.add_argument("--step", type=Fraction, default=Fraction(1, 2))
    ap.add_argument("--format", choices=["markdown", "csv", "json"], default="markdown")
    args = ap.parse_args()
    vals = []
    v = args.lo
    while v <= args.hi:
        vals.append(v)
        v += args.step
    table = sweep_r3_heis3([(x, y, 0, 0) for x in vals for y in vals if y >= 0])
    print(Report("sweep", tables=[table]).render(args.format), end="")
    return 0


if __name__ == "__main__":
    sys.exit(main())
