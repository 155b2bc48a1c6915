#!/usr/bin/env python3
"""Scan the value table for progressions spt2(an+b) == 0 (mod M) and list
the unsubsumed hits, i.e. the candidates worth proving."""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from spt2q.series import DEFAULT_TABLE_N
from spt2q.spt import get_table
from spt2q.verify import scan


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mod", type=int, default=4)
    ap.add_argument("--a-max", type=int, default=80)
    ap.add_argument("--n-min", type=int, default=100,
                    help="minimum witnesses per progression (default %(default)s)")
    ap.add_argument("--table-n", type=int, default=DEFAULT_TABLE_N)
    ap.add_argument("--cache-dir", type=Path, default=None)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--all", action="store_true",
                    help="also list hits subsumed by a coarser progression")
    args = ap.parse_args(argv)

    table = get_table(args.table_n, cache_dir=args.cache_dir, threads=args.threads)
    t0 = time.perf_counter()
    hits = scan(table, args.mod, args.a_max, args.n_min)
    elapsed = time.perf_counter() - t0
    shown = 0
    for h in hits:
        if h.subsumed_by and not args.all:
            continue
        shown += 1
        tail = f"  (refines {h.subsumed_by})" if h.subsumed_by else ""
        print(f"spt2({h.a}n+{h.b}) == 0 mod {h.modulus}  "
              f"[{h.witnesses} witnesses]{tail}")
    print(f"# {shown} shown of {len(hits)} hits, a <= {args.a_max}, "
          f"mod {args.mod}, {elapsed:.2f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
