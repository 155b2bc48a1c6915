"""Elementary number theory for the prime-family congruence mechanism."""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional


def is_prime(n: int) -> bool:
    """Trial division; the inputs here are small."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n; a may be negative or even."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs odd positive n, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def padic_valuation(n: int, p: int) -> int:
    """Largest e with p^e dividing n; n must be a positive integer."""
    if n <= 0:
        raise ValueError(f"valuation needs a positive integer, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


@dataclass(frozen=True)
class QuadFormWitness:
    """Outcome of searching x^2 + 2y^2 = n; rep is the least-x solution."""

    n: int
    rep: Optional[tuple[int, int]]

    @property
    def representable(self) -> bool:
        return self.rep is not None


def represent_x2_2y2(n: int) -> QuadFormWitness:
    """Search x = 0..isqrt(n) for x^2 + 2y^2 = n with x, y >= 0."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    for x in range(isqrt(n) + 1):
        rest = n - x * x
        if rest % 2:
            continue
        y = isqrt(rest // 2)
        if 2 * y * y == rest:
            return QuadFormWitness(n, (x, y))
    return QuadFormWitness(n, None)


def count_odd_representations(n: int) -> int:
    """Number of pairs (x, y) with x, y >= 1 odd and x^2 + 2y^2 = n."""
    count = 0
    for x in range(1, isqrt(n) + 1, 2):
        rest = n - x * x
        if rest <= 0 or rest % 2:
            continue
        y = isqrt(rest // 2)
        if y % 2 == 1 and 2 * y * y == rest:
            count += 1
    return count
