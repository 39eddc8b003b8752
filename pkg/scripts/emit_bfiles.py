#!/usr/bin/env python3
"""Write b-files for all five counting sequences into a directory.

Usage: python scripts/emit_bfiles.py --out-dir bfiles [--max-n 100]
"""

import argparse
from pathlib import Path

from wheelfan.cli import SEQUENCES
from wheelfan.report import BFile


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=Path("bfiles"))
    ap.add_argument("--max-n", type=int, default=100)
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for name, (offset, value_at, description) in sorted(SEQUENCES.items()):
        rows = tuple((i, value_at(i)) for i in range(offset, args.max_n + 1))
        path = args.out_dir / f"{name}.txt"
        path.write_text(BFile(offset, rows).render((f"{name}: {description}; offset {offset}",)))
        print(f"wrote {path} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
