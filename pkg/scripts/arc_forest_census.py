#!/usr/bin/env python3
"""Measure the arc-forest family: cardinalities and forward-map fibers.

Prints, for each rim size, the labeled and rotation-class counts next to the
candidate closed forms, then the fiber report of the forward map.  Nothing is
asserted; this script exists to look at the numbers.

Usage: python scripts/arc_forest_census.py [--min-n 3] [--max-n 7] [--enum-cap 10]
"""

import argparse

from wheelfan.bijection import fiber_report
from wheelfan.enumeration import arc_forest_census


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-n", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--enum-cap", type=int, default=10)
    args = ap.parse_args()
    ns = range(args.min_n, args.max_n + 1)
    for check in arc_forest_census(ns, cap=args.enum_cap):
        print(check.render())
    print()
    for n in ns:
        for line in fiber_report(n, cap=args.enum_cap).render_lines():
            print(line)
        print()


if __name__ == "__main__":
    main()
