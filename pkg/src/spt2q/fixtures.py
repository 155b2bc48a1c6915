"""Fixture files: named identity checks, parsed from a small line format.

    name : LHS == RHS [mod M] [order N]

Each side is an expression in the exprlang grammar, optionally followed by
pipeline stages `| dissect m r`.  A side spt2(a,b) denotes the series
sum_n spt2(a*n+b) q^n taken from the value table.  `order` is the expansion
order of each side before its stages run; the final comparison happens at
the smaller of the two staged orders.

The builtin corpus lives in data/identities.fix plus data/negative.fix
(controls that must fail), with two extra checks defined in code because
their right-hand sides are sparse sums rather than eta quotients.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Callable, Optional

from .dissect import CheckReport, DissectionSpec, check_series_congruence, dissect
from .exprlang import Node, Spt2, expr_series, parse_expression
from .products import cube_f1, expand_eta
from .series import CoeffRing, Series, ZZ
from .spt import Spt2Table, get_table

DEFAULT_FIXTURE_ORDER = 300

TableProvider = Callable[[int], Spt2Table]


class FixtureError(ValueError):
    """Raised for malformed fixture lines."""


@dataclass(frozen=True)
class SideSpec:
    ast: Node
    stages: tuple[DissectionSpec, ...]

    @property
    def spt2_params(self) -> Optional[tuple[int, int]]:
        if isinstance(self.ast, Spt2):
            return (self.ast.step, self.ast.offset)
        return None


@dataclass(frozen=True)
class Fixture:
    name: str
    lhs: SideSpec
    rhs: SideSpec
    modulus: int     # 0 = exact
    order: int

    def table_demand(self, order: Optional[int] = None) -> int:
        """Largest spt2 argument this fixture reads; 0 if it needs no table."""
        k = order if order is not None else self.order
        demand = 0
        for side in (self.lhs, self.rhs):
            params = side.spt2_params
            if params:
                a, b = params
                demand = max(demand, a * (k - 1) + b)
        return demand


_NAME_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9_-]*$")
_TAIL_RE = re.compile(r"(?:\s+mod\s+(\d+))?(?:\s+order\s+(\d+))?\s*$")


def _parse_side(text: str, where: str) -> SideSpec:
    chunks = [c.strip() for c in text.split("|")]
    if not chunks[0]:
        raise FixtureError(f"empty expression in {where}")
    ast = parse_expression(chunks[0], allow_spt2=True)
    stages = []
    for chunk in chunks[1:]:
        parts = chunk.split()
        if len(parts) != 3 or parts[0] != "dissect":
            raise FixtureError(f"bad pipeline stage {chunk!r} in {where}")
        stages.append(DissectionSpec(int(parts[1]), int(parts[2])))
    return SideSpec(ast, tuple(stages))


def parse_fixture_line(line: str) -> Fixture:
    head, sep, rest = line.partition(":")
    if not sep:
        raise FixtureError(f"missing ':' in fixture line {line!r}")
    name = head.strip()
    if not _NAME_RE.match(name):
        raise FixtureError(f"bad fixture name {name!r}")
    lhs_text, sep, rhs_text = rest.partition("==")
    if not sep:
        raise FixtureError(f"missing '==' in fixture {name!r}")
    m = _TAIL_RE.search(rhs_text)
    modulus = int(m.group(1)) if m.group(1) else 0
    order = int(m.group(2)) if m.group(2) else DEFAULT_FIXTURE_ORDER
    rhs_text = rhs_text[:m.start()]
    return Fixture(
        name,
        _parse_side(lhs_text, f"fixture {name!r}"),
        _parse_side(rhs_text, f"fixture {name!r}"),
        modulus,
        order,
    )


def parse_fixture_file(text: str) -> list[Fixture]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append(parse_fixture_line(line))
    return out


def _default_table_provider(demand: int) -> Spt2Table:
    return get_table(demand)


def _side_series(side: SideSpec, order: int, ring: CoeffRing,
                 tables: TableProvider) -> Series:
    params = side.spt2_params
    if params:
        a, b = params
        table = tables(a * (order - 1) + b)
        s = table.progression_series(a, b, order, ring)
    else:
        s = expr_series(side.ast, order, ring)
    for stage in side.stages:
        s = dissect(s, stage.m, stage.r)
    return s


def run_fixture(fx: Fixture, order: Optional[int] = None,
                tables: Optional[TableProvider] = None) -> CheckReport:
    """Expand both sides, run their stages, compare at the common order."""
    k = order if order is not None else fx.order
    ring = CoeffRing(fx.modulus) if fx.modulus else ZZ
    provider = tables if tables is not None else _default_table_provider
    lhs = _side_series(fx.lhs, k, ring, provider)
    rhs = _side_series(fx.rhs, k, ring, provider)
    n = min(lhs.order, rhs.order)
    if n == 0:
        raise FixtureError(f"fixture {fx.name!r} compares zero coefficients")
    return check_series_congruence(lhs.truncate(n), rhs.truncate(n),
                                   fx.modulus, fx.name)


# -- code-defined fixtures ---------------------------------------------------

def _run_lemma6(order: Optional[int], tables: Optional[TableProvider]) -> CheckReport:
    k = order if order is not None else DEFAULT_FIXTURE_ORDER
    lhs = expand_eta(1, k) ** 3
    return check_series_congruence(lhs, cube_f1(k), 0, "lemma6")


def _run_quadform(order: Optional[int], tables: Optional[TableProvider]) -> CheckReport:
    """spt2(32n+24) == 2 * #{(k,l) >= 0 : n = k(k+1) + 2l(l+1)} (mod 4)."""
    k = order if order is not None else 160
    provider = tables if tables is not None else _default_table_provider
    table = provider(32 * (k - 1) + 24)
    lhs = table.progression_series(32, 24, k, CoeffRing(4))
    counts = [0] * k
    i = 0
    while i * (i + 1) < k:
        j = 0
        while i * (i + 1) + 2 * j * (j + 1) < k:
            counts[i * (i + 1) + 2 * j * (j + 1)] += 2
            j += 1
        i += 1
    rhs = Series(CoeffRing(4), counts)
    return check_series_congruence(lhs, rhs, 4, "quadform-32n24")


@dataclass(frozen=True)
class RegistryEntry:
    name: str
    negative: bool
    default_order: int
    run: Callable[[Optional[int], Optional[TableProvider]], CheckReport]
    table_demand: Callable[[Optional[int]], int]


def _entry_from_fixture(fx: Fixture, negative: bool) -> RegistryEntry:
    return RegistryEntry(
        name=fx.name,
        negative=negative,
        default_order=fx.order,
        run=lambda order, tables, _fx=fx: run_fixture(_fx, order, tables),
        table_demand=fx.table_demand,
    )


def _read_data(filename: str) -> str:
    return resources.files("spt2q.data").joinpath(filename).read_text()


@lru_cache(maxsize=1)
def builtin_fixtures() -> dict[str, RegistryEntry]:
    registry: dict[str, RegistryEntry] = {}
    for fx in parse_fixture_file(_read_data("identities.fix")):
        registry[fx.name] = _entry_from_fixture(fx, negative=False)
    for fx in parse_fixture_file(_read_data("negative.fix")):
        if fx.name in registry:
            raise FixtureError(f"duplicate fixture name {fx.name!r}")
        registry[fx.name] = _entry_from_fixture(fx, negative=True)
    registry["lemma6"] = RegistryEntry(
        "lemma6", False, DEFAULT_FIXTURE_ORDER, _run_lemma6, lambda order: 0)
    registry["quadform-32n24"] = RegistryEntry(
        "quadform-32n24", False, 160, _run_quadform,
        lambda order: 32 * ((order or 160) - 1) + 24)
    return registry


def positive_fixture_names() -> list[str]:
    return sorted(n for n, e in builtin_fixtures().items() if not e.negative)
