"""Reproduce the segment-word case tables on the built-in instances.

    python scripts/reproduce_tables.py [--all]

``--all`` also includes the extra rows.
"""

import argparse

from zknot import tables
from zknot.casebook import reproduce_tables


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--all", action="store_true", help="include extra rows")
    args = ap.parse_args()
    rows = tables.ROWS if args.all else tables.TABLE_ROWS
    checks = reproduce_tables(rows)
    for c in checks:
        r = c.row
        words = " | ".join(r.words) if r.words else f"({r.zigzags} zigzags)"
        print(f"{'ok  ' if c.ok else 'FAIL'} {r.source:5} {'+'.join(r.kinds):5} {' '.join(r.images):9} {words}")
        for i in c.instances:
            if not i.ok:
                print(f"      {i.left} + {i.right}: {i.words} ({i.zigzags} zigzags)")
    bad = sum(not c.ok for c in checks)
    print(f"{len(checks) - bad}/{len(checks)} rows reproduced")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
