"""Arithmetic-progression dissection of series and congruence checking.

dissect(a, m, r) keeps the coefficients at exponents r, m+r, 2m+r, ... and
compresses them onto q^0, q^1, q^2, ...; reassemble interleaves m such
strands back.  CheckReport is the single result type for every identity
and congruence comparison in the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .products import ProductExpr, expand_expr
from .series import CoeffRing, Series, ZZ


@dataclass(frozen=True)
class DissectionSpec:
    """Select exponents congruent to r mod m."""

    m: int
    r: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"dissection modulus must be >= 1, got {self.m}")
        if not 0 <= self.r < self.m:
            raise ValueError(f"residue {self.r} out of range for modulus {self.m}")


def dissect(a: Series, m: int, r: int) -> Series:
    """The strand sum_n c(mn+r) q^n of a; its order is ceil((order-r)/m)."""
    DissectionSpec(m, r)
    if r >= a.order:
        return Series.zeros(0, a.ring)
    return Series(a.ring, a.coeffs[r::m])


def reassemble(parts: Sequence[Series], m: int) -> Series:
    """Interleave m strands: coefficient of q^(m*i+r) comes from parts[r][i]."""
    if len(parts) != m:
        raise ValueError(f"need exactly {m} strands, got {len(parts)}")
    ring = parts[0].ring
    for p in parts:
        if p.ring != ring:
            raise ValueError("strands live in different coefficient rings")
    order = min(m * p.order + r for r, p in enumerate(parts))
    cs = [0] * order
    for r, p in enumerate(parts):
        for i, c in enumerate(p.coeffs):
            e = m * i + r
            if e < order:
                cs[e] = c
    return Series(ring, cs)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one series comparison, with the first mismatch if any."""

    name: str
    passed: bool
    order_compared: int
    first_bad_exponent: Optional[int] = None
    lhs_coeff: Optional[int] = None
    rhs_coeff: Optional[int] = None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json_dict(self) -> dict:
        d: dict = {"name": self.name, "status": self.status}
        if not self.passed:
            d["first_bad_exponent"] = self.first_bad_exponent
            d["lhs_coeff"] = self.lhs_coeff
            d["rhs_coeff"] = self.rhs_coeff
        return d


def check_series_congruence(lhs: Series, rhs: Series, modulus: int,
                            name: str = "") -> CheckReport:
    """Compare coefficientwise, mod `modulus` (0 means exact equality)."""
    if lhs.order != rhs.order:
        raise ValueError(f"order mismatch: {lhs.order} != {rhs.order}")
    if modulus:
        lc = [c % modulus for c in lhs.coeffs]
        rc = [c % modulus for c in rhs.coeffs]
    else:
        if lhs.ring != rhs.ring:
            raise ValueError(f"ring mismatch: {lhs.ring} != {rhs.ring}")
        lc = list(lhs.coeffs)
        rc = list(rhs.coeffs)
    for n, (a, b) in enumerate(zip(lc, rc)):
        if a != b:
            return CheckReport(name, False, lhs.order, n, a, b)
    return CheckReport(name, True, lhs.order)


@dataclass(frozen=True)
class IdentityClaim:
    """Two eta-quotient expressions asserted congruent to a given order."""

    name: str
    lhs: ProductExpr
    rhs: ProductExpr
    modulus: int = 0     # 0 = exact identity
    order: int = 300


def check_identity(claim: IdentityClaim) -> CheckReport:
    ring = ZZ if claim.modulus == 0 else CoeffRing(claim.modulus)
    lhs = expand_expr(claim.lhs, claim.order, ring)
    rhs = expand_expr(claim.rhs, claim.order, ring)
    return check_series_congruence(lhs, rhs, claim.modulus, claim.name)
