"""Eta-quotient expansion.

f_k denotes the product (q^k; q^k)_infinity.  Sums of terms
coeff * q^shift * prod_k f_k^e_k are the normal form for the identities
this package checks; expansion turns them into truncated Series using the
pentagonal-number sparse form of f_k and Newton inversion for negative
exponents.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .series import CoeffRing, Series, ZZ

FactorsLike = Union[Mapping[int, int], Iterable[tuple[int, int]], None]


def _normalize_factors(factors: FactorsLike) -> tuple[tuple[int, int], ...]:
    if factors is None:
        return ()
    items = factors.items() if isinstance(factors, Mapping) else factors
    merged: dict[int, int] = {}
    for level, exp in items:
        if level < 1:
            raise ValueError(f"eta level must be >= 1, got {level}")
        merged[level] = merged.get(level, 0) + exp
    return tuple(sorted((k, e) for k, e in merged.items() if e != 0))


@dataclass(frozen=True)
class EtaMonomial:
    """coeff * q^qshift * prod f_level^exp with qshift >= 0."""

    coeff: int
    qshift: int = 0
    factors: tuple[tuple[int, int], ...] = ()

    @classmethod
    def make(cls, coeff: int, qshift: int = 0, factors: FactorsLike = None) -> EtaMonomial:
        if qshift < 0:
            raise ValueError(f"qshift must be >= 0, got {qshift}")
        return cls(coeff, qshift, _normalize_factors(factors))

    def times(self, other: EtaMonomial) -> EtaMonomial:
        merged = dict(self.factors)
        for level, exp in other.factors:
            merged[level] = merged.get(level, 0) + exp
        return EtaMonomial.make(self.coeff * other.coeff,
                                self.qshift + other.qshift, merged)

    def inverse(self) -> EtaMonomial:
        if abs(self.coeff) != 1:
            raise ValueError(f"cannot invert monomial with coefficient {self.coeff}")
        if self.qshift != 0:
            raise ValueError("cannot invert a monomial carrying a power of q")
        return EtaMonomial.make(self.coeff, 0, [(k, -e) for k, e in self.factors])


@dataclass(frozen=True)
class ProductExpr:
    """A sum of EtaMonomial terms."""

    terms: tuple[EtaMonomial, ...] = ()

    @classmethod
    def single(cls, coeff: int, qshift: int = 0, factors: FactorsLike = None) -> ProductExpr:
        if coeff == 0:
            return cls(())
        return cls((EtaMonomial.make(coeff, qshift, factors),))

    def __add__(self, other: ProductExpr) -> ProductExpr:
        return ProductExpr(self.terms + other.terms).normalize()

    def __neg__(self) -> ProductExpr:
        return self.scale(-1)

    def __sub__(self, other: ProductExpr) -> ProductExpr:
        return self + (-other)

    def scale(self, c: int) -> ProductExpr:
        if c == 0:
            return ProductExpr(())
        return ProductExpr(tuple(
            EtaMonomial(c * t.coeff, t.qshift, t.factors) for t in self.terms))

    def __mul__(self, other: ProductExpr) -> ProductExpr:
        out = [a.times(b) for a in self.terms for b in other.terms]
        return ProductExpr(tuple(out)).normalize()

    def __pow__(self, k: int) -> ProductExpr:
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a multi-term expression")
            return ProductExpr((self.terms[0].inverse(),)) ** (-k)
        result = ProductExpr.single(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def normalize(self) -> ProductExpr:
        merged: dict[tuple[int, tuple[tuple[int, int], ...]], int] = {}
        for t in self.terms:
            key = (t.qshift, t.factors)
            merged[key] = merged.get(key, 0) + t.coeff
        terms = tuple(EtaMonomial(c, qs, fs)
                      for (qs, fs), c in sorted(merged.items()) if c != 0)
        return ProductExpr(terms)


@lru_cache(maxsize=None)
def expand_eta(level: int, order: int, ring: CoeffRing = ZZ) -> Series:
    """Expansion of f_level by the pentagonal number theorem."""
    assert level >= 1 and order >= 0
    cs = [0] * order
    if order > 0:
        cs[0] = 1
    j = 1
    while True:
        g1 = level * (j * (3 * j - 1) // 2)
        g2 = level * (j * (3 * j + 1) // 2)
        if g1 >= order and g2 >= order:
            break
        s = 1 if j % 2 == 0 else -1
        if g1 < order:
            cs[g1] += s
        if g2 < order:
            cs[g2] += s
        j += 1
    return Series(ring, cs)


@lru_cache(maxsize=None)
def _eta_inverse(level: int, order: int, ring: CoeffRing) -> Series:
    return expand_eta(level, order, ring).invert()


@lru_cache(maxsize=None)
def _eta_power(level: int, exp: int, order: int, ring: CoeffRing) -> Series:
    assert exp != 0
    if exp > 0:
        return expand_eta(level, order, ring) ** exp
    return _eta_inverse(level, order, ring) ** (-exp)


def expand_monomial(mono: EtaMonomial, order: int, ring: CoeffRing = ZZ) -> Series:
    acc = Series.one(order, ring)
    for level, exp in mono.factors:
        acc = acc * _eta_power(level, exp, order, ring)
    return (acc * mono.coeff).shift(mono.qshift)


def expand_expr(expr: ProductExpr, order: int, ring: CoeffRing = ZZ) -> Series:
    """Expand a sum of eta monomials to a Series of the given order."""
    acc = Series.zeros(order, ring)
    for mono in expr.terms:
        acc = acc + expand_monomial(mono, order, ring)
    return acc


def theta_phi(sign: int, order: int, ring: CoeffRing = ZZ) -> Series:
    """phi(q) = 1 + 2*sum q^(n^2) for sign=+1; phi(-q) for sign=-1."""
    assert sign in (1, -1)
    terms = [(0, 1)]
    n = 1
    while n * n < order:
        c = 2 if sign == 1 else 2 * (-1) ** n
        terms.append((n * n, c))
        n += 1
    return Series.from_terms(terms, order, ring)


def theta_psi(sign: int, order: int, ring: CoeffRing = ZZ) -> Series:
    """psi(q) = sum q^(n(n+1)/2) for sign=+1; psi(-q) for sign=-1."""
    assert sign in (1, -1)
    terms = []
    n = 0
    while n * (n + 1) // 2 < order:
        t = n * (n + 1) // 2
        c = 1 if sign == 1 else (-1) ** (t % 2)
        terms.append((t, c))
        n += 1
    return Series.from_terms(terms, order, ring)


def cube_f1(order: int, ring: CoeffRing = ZZ) -> Series:
    """f_1^3 = sum (-1)^n (2n+1) q^(n(n+1)/2), as a sparse sum."""
    terms = []
    n = 0
    while n * (n + 1) // 2 < order:
        terms.append((n * (n + 1) // 2, (-1) ** n * (2 * n + 1)))
        n += 1
    return Series.from_terms(terms, order, ring)
