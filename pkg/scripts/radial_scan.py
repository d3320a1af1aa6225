#!/usr/bin/env python3
"""Scan rational angles and compare radial limits with the boundary sums.

For each a/d in the requested denominator range the extrapolated interior
value is printed next to the exact finite-sum target, together with the
ladder's internal error estimate.  Useful for choosing ladder parameters:
the error series steepens quickly with d.

    python scripts/radial_scan.py --max-den 3 --rungs 9
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from math import gcd

from mpmath import mp

from borelsum.invariants import phi
from borelsum.summation import radial_limit


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-den", type=int, default=3,
                        help="largest denominator to scan")
    parser.add_argument("--rungs", type=int, default=9,
                        help="ladder length per angle")
    parser.add_argument("--ratio", type=int, default=2,
                        help="geometric step between rungs")
    parser.add_argument("--eps0", default=None,
                        help="starting offset override")
    parser.add_argument("--precision", type=int, default=25)
    return parser.parse_args()


def main() -> int:
    args = parse_args()
    if args.max_den < 1:
        print("error: --max-den must be positive", file=sys.stderr)
        return 2
    mp.dps = args.precision

    print(f"{'alpha':>8}  {'|limit - target|':>18}  {'ladder estimate':>16}")
    worst = mp.mpf(0)
    for den in range(1, args.max_den + 1):
        for num in range(1, den + 1):
            if gcd(num, den) != 1:
                continue
            alpha = Fraction(num, den)
            res = radial_limit(alpha, rungs=args.rungs, ratio=args.ratio,
                               eps0=args.eps0)
            gap = abs(res.value - phi(alpha))
            worst = max(worst, gap)
            print(f"{str(alpha):>8}  {mp.nstr(gap, 4):>18}  "
                  f"{mp.nstr(res.err_estimate, 4):>16}")
    print(f"# worst gap {mp.nstr(worst, 4)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
