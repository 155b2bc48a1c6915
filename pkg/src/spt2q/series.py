"""Truncated power series with exact integer or fixed-modulus coefficients.

A Series holds the coefficients of q^0 .. q^(order-1).  Arithmetic never
invents precision: binary operations truncate to the smaller order of the
two operands.  Coefficients live either in ZZ (modulus 0) or in Z/M for a
fixed modulus M >= 2, reduced to canonical representatives [0, M).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

DEFAULT_IDENTITY_ORDER = 500
DEFAULT_TABLE_N = 10_000

# below this many coefficients the direct O(n^2) product is used; above it,
# products go through integer packing (see _mul_kronecker)
_FAST_MUL_CUTOFF = 48


class RingMismatchError(ValueError):
    """Raised when two series with different coefficient rings are combined."""


class NonUnitError(ValueError):
    """Raised when inverting a series whose constant term is not a unit."""


@dataclass(frozen=True)
class CoeffRing:
    """Coefficient ring: modulus 0 means ZZ, otherwise Z/modulus."""

    modulus: int = 0

    def __post_init__(self) -> None:
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError(f"modulus must be 0 or >= 2, got {self.modulus}")

    def reduce(self, c: int) -> int:
        return c % self.modulus if self.modulus else c

    def __str__(self) -> str:
        return "ZZ" if self.modulus == 0 else f"Z/{self.modulus}"


ZZ = CoeffRing(0)


def _mul_schoolbook(a: list[int], b: list[int], n_out: int, modulus: int) -> list[int]:
    """Direct convolution of the first n_out coefficients."""
    out = [0] * n_out
    for i, ai in enumerate(a):
        if ai == 0 or i >= n_out:
            continue
        top = min(len(b), n_out - i)
        for j in range(top):
            out[i + j] += ai * b[j]
    if modulus:
        out = [c % modulus for c in out]
    return out


def _pack_split(coeffs: list[int], width: int) -> int:
    """Pack signed coefficients into one integer, width bytes per digit."""
    pos = bytearray(width * len(coeffs))
    neg = bytearray(width * len(coeffs))
    has_neg = False
    for i, c in enumerate(coeffs):
        if c > 0:
            pos[i * width:i * width + width] = c.to_bytes(width, "little")
        elif c < 0:
            has_neg = True
            neg[i * width:i * width + width] = (-c).to_bytes(width, "little")
    packed = int.from_bytes(pos, "little")
    if has_neg:
        packed -= int.from_bytes(neg, "little")
    return packed


def _mul_kronecker(a: list[int], b: list[int], n_out: int, modulus: int) -> list[int]:
    """Convolution via packing into a single big-integer product.

    Digits are wide enough that every true coefficient of the product has
    magnitude < 2^(8*width-1); an offset of 2^(8*width-1) per digit makes
    the packed product nonnegative so the digits can be sliced back out
    without carries.  Bit-identical to _mul_schoolbook by construction.
    """
    amax = max(abs(c) for c in a)
    bmax = max(abs(c) for c in b)
    if amax == 0 or bmax == 0:
        return [0] * n_out
    bound = amax * bmax * min(len(a), len(b))
    width = (bound.bit_length() + 2 + 7) // 8
    bits = 8 * width
    half = 1 << (bits - 1)

    prod = _pack_split(a, width) * _pack_split(b, width)
    ndig = len(a) + len(b) - 1
    offset_chunk = b"\x00" * (width - 1) + b"\x80"
    prod += int.from_bytes(offset_chunk * ndig, "little")
    raw = prod.to_bytes(width * ndig, "little")

    take = min(n_out, ndig)
    out = [
        int.from_bytes(raw[k * width:(k + 1) * width], "little") - half
        for k in range(take)
    ]
    if take < n_out:
        out.extend([0] * (n_out - take))
    if modulus:
        out = [c % modulus for c in out]
    return out


def _mul_coeffs(a: list[int], b: list[int], n_out: int, modulus: int) -> list[int]:
    if n_out <= 0:
        return []
    if min(len(a), len(b), n_out) < _FAST_MUL_CUTOFF:
        return _mul_schoolbook(a, b, n_out, modulus)
    return _mul_kronecker(a[:n_out], b[:n_out], n_out, modulus)


class Series:
    """Immutable truncated power series over a CoeffRing."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CoeffRing, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        if ring.modulus:
            m = ring.modulus
            cs = [c % m for c in cs]
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Series is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, order: int, ring: CoeffRing = ZZ) -> Series:
        assert order >= 0
        return cls(ring, [0] * order)

    @classmethod
    def one(cls, order: int, ring: CoeffRing = ZZ) -> Series:
        assert order >= 1
        return cls(ring, [1] + [0] * (order - 1))

    @classmethod
    def from_terms(cls, terms: Union[Mapping[int, int], Iterable[tuple[int, int]]],
                   order: int, ring: CoeffRing = ZZ) -> Series:
        """Build from sparse (exponent, coefficient) data; exponents >= order drop."""
        cs = [0] * order
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            if exp < 0:
                raise ValueError(f"negative exponent {exp}")
            if exp < order:
                cs[exp] += c
        return cls(ring, cs)

    # -- accessors ----------------------------------------------------

    def coefficient(self, n: int) -> int:
        if not 0 <= n < self.order:
            raise IndexError(f"exponent {n} outside truncation range [0, {self.order})")
        return self.coeffs[n]

    def truncate(self, order: int) -> Series:
        if order >= self.order:
            return self
        return Series(self.ring, self.coeffs[:order])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # -- ring plumbing ------------------------------------------------

    def _common(self, other: Series) -> tuple[int, int]:
        if self.ring != other.ring:
            raise RingMismatchError(f"cannot combine {self.ring} with {other.ring}")
        return min(self.order, other.order), self.ring.modulus

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: Series) -> Series:
        n, _ = self._common(other)
        cs = [self.coeffs[i] + other.coeffs[i] for i in range(n)]
        return Series(self.ring, cs)

    def __sub__(self, other: Series) -> Series:
        n, _ = self._common(other)
        cs = [self.coeffs[i] - other.coeffs[i] for i in range(n)]
        return Series(self.ring, cs)

    def __neg__(self) -> Series:
        return Series(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other: Union[Series, int]) -> Series:
        if isinstance(other, int):
            return Series(self.ring, [other * c for c in self.coeffs])
        if not isinstance(other, Series):
            return NotImplemented
        n, m = self._common(other)
        return Series(self.ring, _mul_coeffs(list(self.coeffs), list(other.coeffs), n, m))

    def __rmul__(self, other: int) -> Series:
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, k: int) -> Series:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.invert() ** (-k)
        result = Series.one(self.order, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, s: int) -> Series:
        """Multiply by q^s, truncating at the original order."""
        assert s >= 0
        if s == 0:
            return self
        cs = [0] * min(s, self.order) + list(self.coeffs[:max(0, self.order - s)])
        return Series(self.ring, cs)

    def invert(self) -> Series:
        """Multiplicative inverse, by Newton iteration x <- x(2 - ax)."""
        if self.order == 0:
            return self
        c0 = self.coeffs[0]
        mod = self.ring.modulus
        if mod == 0:
            if c0 not in (1, -1):
                raise NonUnitError(f"constant term {c0} is not a unit in ZZ")
            inv0 = c0
        else:
            try:
                inv0 = pow(c0, -1, mod)
            except ValueError:
                raise NonUnitError(f"constant term {c0} is not a unit mod {mod}") from None
        a = list(self.coeffs)
        x = [inv0]
        k = 1
        while k < self.order:
            k = min(2 * k, self.order)
            ax = _mul_coeffs(a[:k], x, k, mod)
            two_minus = [2 - ax[0]] + [-c for c in ax[1:]]
            x = _mul_coeffs(x, two_minus, k, mod)
        return Series(self.ring, x)

    def substitute_power(self, m: int, order: int | None = None) -> Series:
        """Replace q by q^m; by default the result keeps this series' order."""
        assert m >= 1
        n_out = self.order if order is None else order
        cs = [0] * n_out
        for i, c in enumerate(self.coeffs):
            e = i * m
            if e >= n_out:
                break
            cs[e] = c
        return Series(self.ring, cs)

    def reduce_mod(self, m: int) -> Series:
        if m < 2:
            raise ValueError(f"target modulus must be >= 2, got {m}")
        cur = self.ring.modulus
        if cur != 0 and cur % m != 0:
            raise ValueError(f"cannot reduce {self.ring} mod {m}")
        return Series(CoeffRing(m), self.coeffs)

    # -- display --------------------------------------------------------

    def __repr__(self) -> str:
        head = []
        for n, c in enumerate(self.coeffs):
            if c:
                head.append(f"{c}*q^{n}" if n else str(c))
            if len(head) == 6:
                head.append("...")
                break
        body = " + ".join(head) if head else "0"
        return f"<Series {self.ring} order={self.order}: {body}>"
