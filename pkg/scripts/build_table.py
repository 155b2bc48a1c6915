#!/usr/bin/env python3
"""Build (or extend) the cached spt2 value table and optionally export it."""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from spt2q.series import DEFAULT_TABLE_N
from spt2q.spt import get_table, write_csv


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=DEFAULT_TABLE_N,
                    help="largest argument to tabulate (default %(default)s)")
    ap.add_argument("--cache-dir", type=Path, default=None,
                    help="cache directory (default: SPT2_CACHE_DIR or ~/.cache/spt2q)")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--csv", type=Path, default=None,
                    help="also write n,spt2(n) rows to this file")
    args = ap.parse_args(argv)

    t0 = time.perf_counter()
    table = get_table(args.n, cache_dir=args.cache_dir, threads=args.threads)
    elapsed = time.perf_counter() - t0
    top = table.spt2(table.n_max)
    print(f"table ready: n_max={table.n_max} in {elapsed:.1f}s, "
          f"spt2({table.n_max}) has {top.bit_length()} bits")
    if args.csv is not None:
        with open(args.csv, "w") as fh:
            write_csv(table, fh)
        print(f"wrote {args.csv}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
