"""Command line interface.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
computation error.  Output is deterministic: JSON lines by default, or
csv / text via --format.  The value table is cached on disk; set
SPT2_CACHE_DIR or pass --cache-dir to move it.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional

from .dissect import dissect
from .exprlang import LoweringError, ParseError, expr_series, parse_expression
from .fixtures import (FixtureError, builtin_fixtures, parse_fixture_file,
                       positive_fixture_names, run_fixture, _entry_from_fixture)
from .series import DEFAULT_TABLE_N, CoeffRing, ZZ
from .spt import build_table, get_table, spt2_enum, spt2_series, write_csv
from .verify import (FAMILY_CLAIMS, PRIOR_CLAIMS, THEOREM1_CLAIMS,
                     CongruenceClaim, PrimeFamilyClaim, scan, verify_claim,
                     verify_family, verify_induction_step, verify_prime_family)


def _emit(args, rows: list[dict], csv_fields: Optional[list[str]] = None,
          text_fn=None) -> None:
    if args.format == "json":
        for row in rows:
            print(json.dumps(row))
    elif args.format == "csv":
        fields = csv_fields or (list(rows[0].keys()) if rows else [])
        print(",".join(fields))
        for row in rows:
            print(",".join(str(row.get(f, "")) for f in fields))
    else:
        for row in rows:
            print(text_fn(row) if text_fn else " ".join(f"{k}={v}" for k, v in row.items()))


def cmd_table(args) -> int:
    n = args.n
    if args.no_cache:
        table = build_table(n, threads=args.threads)
    else:
        table = get_table(n, cache_dir=args.cache_dir, threads=args.threads)
        table = table.truncate(n)
    if args.cross_check:
        prefix = spt2_series(min(n, 300) + 1)
        for i, c in enumerate(prefix.coeffs):
            if i <= n and c != table.values[i]:
                raise ArithmeticError(f"table disagrees with direct expansion at n={i}")
        for i in range(min(n, 24) + 1):
            if spt2_enum(i) != table.values[i]:
                raise ArithmeticError(f"table disagrees with enumeration at n={i}")
        print(f"cross-check ok: series prefix to {min(n, 300)}, "
              f"enumeration to {min(n, 24)}", file=sys.stderr)
    if args.format == "csv":
        write_csv(table, sys.stdout)
    else:
        rows = [{"n": i, "spt2": v} for i, v in enumerate(table.values)]
        _emit(args, rows, text_fn=lambda r: f"spt2({r['n']}) = {r['spt2']}")
    return 0


def _claim_text(r: dict) -> str:
    c = r["claim"]
    head = f"spt2({c['a']}n+{c['b']}) == 0 mod {c['modulus']}"
    if r["status"] == "pass":
        return f"{head}: pass ({r['witnesses_checked']} witnesses)"
    v = r["violations"][0]
    return (f"{head}: FAIL at n={v['n']} "
            f"(spt2({v['argument']}) == {v['residue']})")


def cmd_verify(args) -> int:
    claim = CongruenceClaim(args.a, args.b, args.mod)
    n_max = args.n_max
    if args.arg_max is not None:
        n_max = max(0, (args.arg_max - args.b) // args.a)
    demand = claim.argument(n_max)
    table = get_table(demand, cache_dir=args.cache_dir, threads=args.threads)
    report = verify_claim(claim, table, n_max)
    _emit(args, [report.to_json_dict()],
          csv_fields=["a", "b", "modulus", "status", "witnesses_checked"],
          text_fn=_claim_text)
    return 0 if report.passed else 1


def cmd_verify_theorem(args) -> int:
    rows = []
    ok = True
    if args.theorem == "prior":
        claims = PRIOR_CLAIMS
    elif args.theorem == "1":
        claims = THEOREM1_CLAIMS
    else:
        claims = ()

    if claims:
        def bound(c: CongruenceClaim) -> int:
            if args.arg_max is not None:
                return max(0, (args.arg_max - c.b) // c.a)
            return args.n_max
        demand = max(c.argument(bound(c)) for c in claims)
        table = get_table(demand, cache_dir=args.cache_dir, threads=args.threads)
        for c in claims:
            r = verify_claim(c, table, bound(c))
            ok &= r.passed
            rows.append(r.to_json_dict())
        _emit(args, rows,
              csv_fields=["status", "witnesses_checked"], text_fn=_claim_text)
        return 0 if ok else 1

    if args.theorem == "2":
        demand = max(f.instance(args.j_max).argument(args.n_max) for f in FAMILY_CLAIMS)
        table = get_table(demand, cache_dir=args.cache_dir, threads=args.threads)
        for fam in FAMILY_CLAIMS:
            r = verify_family(fam, table, args.j_max, args.n_max)
            ok &= r.passed
            rows.append(r.to_json_dict())
            if args.induction:
                for j in range(args.j_max):
                    ir = verify_induction_step(fam, j, table, args.n_max)
                    ok &= ir.passed
                    rows.append(ir.to_json_dict())
        _emit(args, rows, text_fn=lambda r: json.dumps(r))
        return 0 if ok else 1

    assert args.theorem == "3"
    pfcs = [PrimeFamilyClaim(p, args.k_max, args.m_max) for p in args.p]
    demand = max(32 * c.p ** (2 * c.k_max + 1) * c.m_max + 24 * c.p ** (2 * c.k_max + 2)
                 for c in pfcs)
    table = get_table(demand, cache_dir=args.cache_dir, threads=args.threads)
    for c in pfcs:
        r = verify_prime_family(c, table)
        ok &= r.passed
        rows.append(r.to_json_dict())
    _emit(args, rows, text_fn=lambda r: json.dumps(r))
    return 0 if ok else 1


def cmd_identity(args) -> int:
    registry = builtin_fixtures()
    if args.file:
        file_entries = {}
        for fx in parse_fixture_file(Path(args.file).read_text()):
            file_entries[fx.name] = _entry_from_fixture(fx, negative=False)
        pool = file_entries
        names = args.names or sorted(pool)
    else:
        pool = registry
        if args.all:
            names = positive_fixture_names()
        elif args.names:
            names = args.names
        else:
            raise FixtureError("no fixture selected: pass names, --all, or --file")
    missing = [n for n in names if n not in pool]
    if missing:
        raise FixtureError(f"unknown fixture name(s): {', '.join(missing)}")

    # warm the table once so concurrent fixtures share it
    demand = max((pool[n].table_demand(args.order) for n in names), default=0)
    if demand:
        get_table(demand, cache_dir=args.cache_dir, threads=args.threads)
    tables = lambda d: get_table(d, cache_dir=args.cache_dir)

    def run_one(name: str):
        return pool[name].run(args.order, tables)

    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as ex:
            reports = list(ex.map(run_one, names))
    else:
        reports = [run_one(n) for n in names]
    reports.sort(key=lambda r: r.name)
    rows = [r.to_json_dict() for r in reports]
    _emit(args, rows, csv_fields=["name", "status", "first_bad_exponent"],
          text_fn=lambda r: f"{r['name']}: {r['status']}"
          + ("" if r["status"] == "pass" else
             f" (first bad exponent {r['first_bad_exponent']})"))
    return 0 if all(r.passed for r in reports) else 1


def cmd_dissect(args) -> int:
    ring = CoeffRing(args.mod) if args.mod else ZZ
    node = parse_expression(args.expr)
    series = expr_series(node, args.order, ring)
    part = dissect(series, args.m, args.r)
    rows = [{"n": i, "coeff": c} for i, c in enumerate(part.coeffs)]
    _emit(args, rows, csv_fields=["n", "coeff"],
          text_fn=lambda r: f"q^{r['n']}: {r['coeff']}")
    return 0


def cmd_scan(args) -> int:
    table = get_table(args.table_n, cache_dir=args.cache_dir, threads=args.threads)
    hits = scan(table, args.mod, args.a_max, args.n_min)
    rows = [h.to_json_dict() for h in hits]
    if args.format == "csv":
        for row in rows:
            pair = row["subsumed_by"]
            row["subsumed_by"] = f"{pair[0]}:{pair[1]}" if pair else ""
    _emit(args, rows,
          csv_fields=["a", "b", "modulus", "witnesses", "subsumed_by"],
          text_fn=lambda r: f"spt2({r['a']}n+{r['b']}) == 0 mod {r['modulus']} "
          f"[{r['witnesses']} witnesses]"
          + (f" subsumed by {tuple(r['subsumed_by'])}" if r["subsumed_by"] else ""))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"),
                        default="json", help="output format (default json lines)")
    common.add_argument("--cache-dir", type=Path, default=None,
                        help="table cache directory (default $SPT2_CACHE_DIR "
                             "or ~/.cache/spt2q)")
    common.add_argument("--threads", type=int, default=1,
                        help="worker threads for builds and fixture runs")
    common.add_argument("--seed", type=int, default=0,
                        help="reserved for randomized subcommands; current "
                             "commands are deterministic")

    ap = argparse.ArgumentParser(
        prog="spt2q",
        description="Exact verification of spt2(n) congruences.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common],
                       help="print spt2(0..N) from the exact table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cross-check", action="store_true",
                   help="recheck a prefix against direct expansion and enumeration")
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("verify", parents=[common],
                       help="check one progression spt2(a n + b) == 0 (mod M)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--n-max", type=int, default=100)
    g.add_argument("--arg-max", type=int, default=None,
                   help="check all arguments a n + b <= this bound")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("verify-theorem", parents=[common],
                       help="run a whole claim set")
    p.add_argument("theorem", choices=("prior", "1", "2", "3"))
    g = p.add_mutually_exclusive_group()
    g.add_argument("--n-max", type=int, default=50)
    g.add_argument("--arg-max", type=int, default=None)
    p.add_argument("--j-max", type=int, default=3,
                   help="largest doubling index for the families")
    p.add_argument("--induction", action="store_true",
                   help="also replay the doubling steps j -> j+1")
    p.add_argument("--p", type=int, action="append", default=None,
                   help="prime(s) for the prime family (repeatable)")
    p.add_argument("--k-max", type=int, default=0)
    p.add_argument("--m-max", type=int, default=10)
    p.set_defaults(fn=cmd_verify_theorem)

    p = sub.add_parser("identity", parents=[common],
                       help="run named identity fixtures")
    p.add_argument("names", nargs="*")
    p.add_argument("--all", action="store_true",
                   help="every builtin fixture except the negative controls")
    p.add_argument("--file", type=Path, default=None,
                   help="run fixtures from a file instead of the builtins")
    p.add_argument("--order", type=int, default=None,
                   help="override each fixture's expansion order")
    p.set_defaults(fn=cmd_identity)

    p = sub.add_parser("dissect", parents=[common],
                       help="print one arithmetic-progression strand of an expression")
    p.add_argument("expr")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--order", type=int, default=120)
    p.add_argument("--mod", type=int, default=0)
    p.set_defaults(fn=cmd_dissect)

    p = sub.add_parser("scan", parents=[common],
                       help="search progressions that vanish mod M over the table")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--a-max", type=int, default=80)
    p.add_argument("--n-min", type=int, default=100,
                   help="minimum number of table witnesses per progression")
    p.add_argument("--table-n", type=int, default=DEFAULT_TABLE_N)
    p.set_defaults(fn=cmd_scan)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 on --help
        return int(e.code or 0)
    if getattr(args, "theorem", None) == "3" and args.p is None:
        args.p = [5, 7]
    try:
        return args.fn(args)
    except (ParseError, LoweringError, FixtureError, ValueError,
            ArithmeticError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
