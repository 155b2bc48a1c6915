"""Truncated power series arithmetic over ZZ and ZZ/M."""
from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from spt2q.series import (
    CoeffRing,
    NonUnitError,
    RingMismatchError,
    Series,
    ZZ,
    _mul_kronecker,
    _mul_schoolbook,
)

MODULI = [0, 2, 3, 4, 5, 8, 9, 16, 97]

rings = st.sampled_from([CoeffRing(m) for m in MODULI])
coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=40)


@st.composite
def series_pairs(draw, count=2):
    ring = draw(rings)
    order = draw(st.integers(1, 40))
    out = tuple(
        Series(ring, draw(st.lists(st.integers(-30, 30), min_size=order, max_size=order)))
        for _ in range(count)
    )
    return out


def test_ring_reduce():
    assert ZZ.modulus == 0
    assert ZZ.reduce(-7) == -7
    r4 = CoeffRing(4)
    assert r4.reduce(-1) == 3
    assert r4.reduce(10) == 2
    assert str(r4) == "Z/4"
    assert str(ZZ) == "ZZ"


def test_ring_validation():
    with pytest.raises(ValueError):
        CoeffRing(1)
    with pytest.raises(ValueError):
        CoeffRing(-3)


def test_construction_and_coefficient():
    f = Series.from_terms({0: 1, 3: -2}, order=6)
    assert f.coeffs == (1, 0, 0, -2, 0, 0)
    assert f.order == 6
    assert f.coefficient(3) == -2
    assert f.coefficient(5) == 0
    with pytest.raises(IndexError):
        f.coefficient(6)
    with pytest.raises(IndexError):
        f.coefficient(-1)


def test_canonical_residues():
    f = Series(CoeffRing(4), [-1, 5, 8])
    assert f.coeffs == (3, 1, 0)


def test_immutable():
    f = Series.one(4)
    with pytest.raises(AttributeError):
        f.coeffs = (2,)


def test_zeros_one():
    assert Series.zeros(3).coeffs == (0, 0, 0)
    assert Series.one(3).coeffs == (1, 0, 0)
    assert Series.one(3).is_zero() is False
    assert Series.zeros(3).is_zero() is True


def test_ring_mismatch():
    a = Series(CoeffRing(4), [1, 2])
    b = Series(CoeffRing(8), [1, 2])
    with pytest.raises(RingMismatchError):
        a + b
    with pytest.raises(RingMismatchError):
        a * b


def test_truncation_to_min_order():
    a = Series(ZZ, [1, 1, 1, 1])
    b = Series(ZZ, [1, 1])
    assert (a + b).order == 2
    assert (a * b).order == 2
    assert (a - b).order == 2


@given(series_pairs(count=2))
def test_add_sub_roundtrip(fs):
    a, b = fs
    assert (a + b) - b == a
    assert a - a == Series.zeros(a.order, a.ring)


@given(series_pairs(count=2))
def test_mul_commutes(fs):
    a, b = fs
    assert a * b == b * a


@given(series_pairs(count=3))
def test_mul_associates_and_distributes(fs):
    a, b, c = fs
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series_pairs(count=1))
def test_scalar_multiplication(fs):
    (a,) = fs
    assert 3 * a == a + a + a
    assert a * 0 == Series.zeros(a.order, a.ring)
    assert -a == a * (-1)


@given(coeff_lists, coeff_lists, st.sampled_from(MODULI))
def test_kronecker_matches_schoolbook(xs, ys, mod):
    n_out = min(len(xs), len(ys))
    assert _mul_kronecker(xs, ys, n_out, mod) == _mul_schoolbook(xs, ys, n_out, mod)


def test_kronecker_large_product():
    # above the fast-multiply cutoff, cross-check one big product exactly
    xs = [((-1) ** n) * (n * n + 1) for n in range(200)]
    ys = [(3 * n - 100) for n in range(200)]
    assert _mul_kronecker(xs, ys, 200, 0) == _mul_schoolbook(xs, ys, 200, 0)


def test_pow_matches_repeated_multiplication():
    f = Series(ZZ, [1, -1, 2, 0, 5])
    acc = Series.one(5)
    for k in range(6):
        assert f ** k == acc
        acc = acc * f


def test_pow_negative_inverts():
    f = Series(ZZ, [1, 3, -2, 7])
    assert f ** -2 == (f.invert()) ** 2
    assert f ** -1 == f.invert()


@given(series_pairs(count=1))
def test_invert_roundtrip(fs):
    (a,) = fs
    one = Series.one(a.order, a.ring)
    unit = a + one - Series.from_terms({0: a.coefficient(0)}, a.order, a.ring)
    assert (unit * unit.invert()) == one


def test_invert_requires_unit_constant():
    with pytest.raises(NonUnitError):
        Series(ZZ, [2, 1]).invert()
    with pytest.raises(NonUnitError):
        Series(CoeffRing(4), [2, 1]).invert()
    # 3 is a unit mod 4
    f = Series(CoeffRing(4), [3, 1, 1])
    assert (f * f.invert()) == Series.one(3, CoeffRing(4))


def test_invert_geometric_series():
    f = Series.from_terms({0: 1, 1: -1}, order=10)
    assert f.invert().coeffs == (1,) * 10


def test_shift():
    f = Series(ZZ, [1, 2, 3, 4])
    assert f.shift(0) is f
    assert f.shift(2).coeffs == (0, 0, 1, 2)
    assert f.shift(10).coeffs == (0, 0, 0, 0)


def test_substitute_power():
    f = Series(ZZ, [1, 2, 3])
    assert f.substitute_power(2).coeffs == (1, 0, 2)
    assert f.substitute_power(2, order=6).coeffs == (1, 0, 2, 0, 3, 0)
    assert f.substitute_power(1) == f


def test_reduce_mod():
    f = Series(ZZ, [5, -1, 8])
    assert f.reduce_mod(4).coeffs == (1, 3, 0)
    g = Series(CoeffRing(8), [5, 7])
    assert g.reduce_mod(4).coeffs == (1, 3)
    with pytest.raises(ValueError):
        g.reduce_mod(3)
    with pytest.raises(ValueError):
        f.reduce_mod(1)


def test_hash_consistent_with_eq():
    a = Series(CoeffRing(4), [-1, 5])
    b = Series(CoeffRing(4), [3, 1])
    assert a == b and hash(a) == hash(b)


def test_repr_mentions_leading_terms():
    r = repr(Series(ZZ, [1, 0, -2]))
    assert "q^2" in r and "order=3" in r
