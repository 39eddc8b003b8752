#!/usr/bin/env python3
"""Run every cross-validation suite and print the combined report.

Usage: python scripts/verify_all.py [--max-n 12] [--enum-cap 9] [--suite all]
Exit code 1 if any asserted check fails.
"""

import argparse
import sys

from wheelfan import verify


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suite", default="all")
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--enum-cap", type=int, default=9)
    args = ap.parse_args()
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    report = verify.run_suites(names, args.max_n, args.enum_cap)
    for line in report.render_lines():
        print(line)
    return 0 if report.all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
