#!/usr/bin/env python3
"""Run the full congruence catalog end to end and print a one-line summary
per check: known progressions, the doubling families with their induction
replays, the prime families, and the identity fixture suite."""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from spt2q.fixtures import builtin_fixtures
from spt2q.series import DEFAULT_TABLE_N
from spt2q.spt import get_table
from spt2q.verify import (
    FAMILY_CLAIMS,
    PRIOR_CLAIMS,
    THEOREM1_CLAIMS,
    PrimeFamilyClaim,
    verify_claim,
    verify_family,
    verify_induction_step,
    verify_prime_family,
)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--table-n", type=int, default=DEFAULT_TABLE_N)
    ap.add_argument("--cache-dir", type=Path, default=None)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--j-max", type=int, default=3)
    ap.add_argument("--primes", type=int, nargs="+", default=[5, 7, 13])
    args = ap.parse_args(argv)

    t0 = time.perf_counter()
    table = get_table(args.table_n, cache_dir=args.cache_dir, threads=args.threads)
    print(f"table: n_max={table.n_max} ({time.perf_counter() - t0:.1f}s)")
    failures = 0

    def line(label, ok, extra=""):
        nonlocal failures
        if not ok:
            failures += 1
        print(f"  {'ok  ' if ok else 'FAIL'} {label}" + (f" {extra}" if extra else ""))

    print("single progressions over the full table:")
    for claim in PRIOR_CLAIMS + THEOREM1_CLAIMS:
        n_max = (table.n_max - claim.b) // claim.a
        rep = verify_claim(claim, table, n_max=n_max)
        line(f"spt2({claim.a}n+{claim.b}) == 0 mod {claim.modulus}",
             rep.passed, f"[{rep.witnesses_checked} witnesses]")

    print(f"doubling families to j={args.j_max} with induction replay:")
    for fam in FAMILY_CLAIMS:
        top = fam.instance(args.j_max)
        n_max = (table.n_max - top.b) // top.a
        rep = verify_family(fam, table, j_max=args.j_max, n_max=n_max)
        steps_ok = True
        for j in range(min(args.j_max, 3)):
            nxt = fam.instance(j + 1)
            step = verify_induction_step(fam, j, table,
                                         n_max=(table.n_max - nxt.b) // nxt.a)
            steps_ok = steps_ok and step.passed
        line(f"{fam.name}: spt2({fam.a0}*2^j n + {fam.b0}*2^j)",
             rep.passed and steps_ok)

    print(f"prime families, k=0, m <= 10:")
    for p in args.primes:
        rep = verify_prime_family(PrimeFamilyClaim(p, 0, 10), table)
        line(f"p={p}", rep.passed, f"[{len(rep.instances)} instances]")

    print("identity fixtures:")
    entries = builtin_fixtures()
    bad = []
    for name, entry in sorted(entries.items()):
        rep = entry.run(None, lambda demand: table)
        if rep.passed == entry.negative:
            bad.append(name)
    line(f"{len(entries)} fixtures (3 negative controls must fail)", not bad,
         f"unexpected: {bad}" if bad else "")

    print(f"total: {'all checks passed' if not failures else f'{failures} FAILURES'} "
          f"in {time.perf_counter() - t0:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
