"""Jacobi symbols, p-adic valuations, and x^2 + 2y^2 representability."""
from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from spt2q.arith import (
    count_odd_representations,
    is_prime,
    jacobi,
    padic_valuation,
    represent_x2_2y2,
)

ODD_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}
    for n in range(31):
        assert is_prime(n) == (n in primes)
    assert is_prime(7919)
    assert not is_prime(7917)


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_jacobi_matches_euler_criterion(p):
    for a in range(p):
        euler = pow(a, (p - 1) // 2, p)
        expected = 0 if euler == 0 else (1 if euler == 1 else -1)
        assert jacobi(a, p) == expected


def test_jacobi_of_minus_two():
    # (-2/p) is -1 exactly for p = 5, 7 mod 8
    assert jacobi(-2, 5) == -1
    assert jacobi(-2, 7) == -1
    assert jacobi(-2, 13) == -1
    assert jacobi(-2, 23) == -1
    assert jacobi(-2, 3) == 1
    assert jacobi(-2, 11) == 1
    assert jacobi(-2, 17) == 1


def test_jacobi_validation():
    with pytest.raises(ValueError):
        jacobi(2, 4)
    with pytest.raises(ValueError):
        jacobi(2, -3)
    with pytest.raises(ValueError):
        jacobi(2, 0)


@given(st.integers(-200, 200),
       st.integers(0, 60).map(lambda k: 2 * k + 1),
       st.integers(0, 60).map(lambda k: 2 * k + 1))
def test_jacobi_multiplicative_in_denominator(a, m, n):
    assert jacobi(a, m * n) == jacobi(a, m) * jacobi(a, n)


@given(st.integers(-200, 200), st.integers(-200, 200),
       st.integers(0, 60).map(lambda k: 2 * k + 1))
def test_jacobi_multiplicative_in_numerator(a, b, n):
    assert jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n)


def test_padic_valuation():
    assert padic_valuation(600, 5) == 2
    assert padic_valuation(95, 5) == 1
    assert padic_valuation(49, 7) == 2
    assert padic_valuation(7, 7) == 1
    assert padic_valuation(6, 7) == 0


def test_padic_valuation_validation():
    with pytest.raises(ValueError):
        padic_valuation(0, 5)
    with pytest.raises(ValueError):
        padic_valuation(10, 6)


@given(st.integers(0, 10), st.integers(1, 50), st.sampled_from([2, 3, 5, 7]))
def test_padic_valuation_roundtrip(k, m, p):
    if m % p == 0:
        m += 1 if (m + 1) % p else 2
    assert padic_valuation(p ** k * m, p) == k


def test_representable_examples():
    assert represent_x2_2y2(3).rep == (1, 1)
    assert represent_x2_2y2(9).rep == (1, 2)
    assert represent_x2_2y2(0).rep == (0, 0)
    assert represent_x2_2y2(2).rep == (0, 1)
    w = represent_x2_2y2(5)
    assert not w.representable and w.rep is None
    assert not represent_x2_2y2(95).representable
    with pytest.raises(ValueError):
        represent_x2_2y2(-1)


@given(st.integers(0, 40), st.integers(0, 40))
def test_representable_detects_constructed_values(x, y):
    assert represent_x2_2y2(x * x + 2 * y * y).representable


@given(st.integers(0, 500))
def test_residues_5_and_7_mod_8_never_representable(k):
    # squares are 0, 1, 4 mod 8 and 2y^2 is 0 or 2, so sums avoid 5 and 7
    for residue in (5, 7):
        assert not represent_x2_2y2(8 * k + residue).representable


def test_count_odd_representations_examples():
    assert count_odd_representations(3) == 1          # 1 + 2
    assert count_odd_representations(9) == 0          # 9 = 1+8 needs y=2 even
    assert count_odd_representations(11) == 1         # 9 + 2
    assert count_odd_representations(27) == 2         # 25+2 and 9+18
    assert count_odd_representations(5) == 0


@given(st.integers(0, 300))
def test_odd_representations_bridge(k):
    # for n = 3 mod 8 every representation has both coordinates odd,
    # so representability and an odd-coordinate witness coincide
    n = 8 * k + 3
    has_odd = count_odd_representations(n) > 0
    assert represent_x2_2y2(n).representable == has_odd
