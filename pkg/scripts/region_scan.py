"""Exploratory scan of z values where the fused weights are nonnegative.

    python scripts/region_scan.py --k 2 --l 3 --q 1/2 --lo -10 --hi 20 --steps 120
"""

import argparse
from fractions import Fraction

from fusedhecke.errors import fmt
from fusedhecke.heckerep import BlockShape
from fusedhecke.vertexsim import region_scan


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=1)
    ap.add_argument("--l", type=int, default=1)
    ap.add_argument("--q", type=Fraction, default=Fraction(1, 2))
    ap.add_argument("--lo", type=Fraction, default=Fraction(-10))
    ap.add_argument("--hi", type=Fraction, default=Fraction(20))
    ap.add_argument("--steps", type=int, default=120)
    a = ap.parse_args()
    grid = [a.lo + (a.hi - a.lo) * i / a.steps for i in range(a.steps + 1)]
    for lo, hi in region_scan(BlockShape(a.k, a.l), a.q, grid):
        print(f"[{fmt(lo)}, {fmt(hi)}]")


if __name__ == "__main__":
    main()
