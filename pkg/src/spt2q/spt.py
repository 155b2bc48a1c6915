"""The smallest-parts function spt2 over overpartitions.

spt2(n) counts the smallest parts in the overpartitions of n whose
smallest part is even and not overlined.  Three independent routes:

  * enumeration: literally build every overpartition (slow, the oracle);
  * spt2_series: exact integer expansion of the generating function
    sum_{s even} q^s/(1-q^s)^2 * prod_{j>s} (1+q^j)/(1-q^j);
  * build_table: the same generating function evaluated mod many word-size
    primes in numpy lanes, recombined by CRT to exact integers, cross-checked
    against a held-out prime.  Cached on disk.

The table is the workhorse for congruence verification up to n ~ 10^4.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import isqrt
from pathlib import Path
from typing import Iterator, Optional

import numpy as np

from .series import CoeffRing, Series, ZZ

ENUMERATION_LIMIT = 40
CACHE_ENV_VAR = "SPT2_CACHE_DIR"
CACHE_MAGIC = b"SPT2"
CACHE_VERSION = 1


class CacheError(ValueError):
    """Raised when a table cache file is malformed."""


# -- enumeration oracle --------------------------------------------------

@dataclass(frozen=True)
class Overpartition:
    """Parts in descending order; overlined holds the overlined part values."""

    parts: tuple[int, ...]
    overlined: frozenset[int]

    def smallest(self) -> int:
        assert self.parts, "empty overpartition has no smallest part"
        return self.parts[-1]


def _partitions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_overpartitions(n: int, limit: int = ENUMERATION_LIMIT) -> Iterator[Overpartition]:
    """Every overpartition of n exactly once (first occurrence may be overlined)."""
    if n < 0 or n > limit:
        raise ValueError(f"n={n} outside enumeration range [0, {limit}]")
    for parts in _partitions(n, n):
        distinct = sorted(set(parts))
        for k in range(len(distinct) + 1):
            for chosen in combinations(distinct, k):
                yield Overpartition(parts, frozenset(chosen))


def spt2_enum(n: int, limit: int = ENUMERATION_LIMIT) -> int:
    """spt2(n) by exhaustive enumeration; the ground-truth oracle."""
    total = 0
    for op in enumerate_overpartitions(n, limit):
        if not op.parts:
            continue
        s = op.smallest()
        if s % 2 == 0 and s not in op.overlined:
            total += op.parts.count(s)
    return total


# -- exact generating function -------------------------------------------

def spt2_series(order: int, ring: CoeffRing = ZZ) -> Series:
    """First `order` coefficients of sum_n spt2(n) q^n, exactly."""
    if order <= 0:
        return Series.zeros(max(order, 0), ring)
    n = order
    tail = [0] * n    # prod_{j>s} (1+q^j)/(1-q^j), maintained as s decreases
    tail[0] = 1
    out = [0] * n
    for s in range(n - 1, 0, -1):
        if s % 2 == 0:
            # q^s/(1-q^s)^2 = sum_k k q^{ks}
            for k in range(1, (n - 1) // s + 1):
                base = k * s
                for i in range(n - base):
                    out[base + i] += k * tail[i]
        # fold in (1+q^s)/(1-q^s)
        for i in range(n - 1, s - 1, -1):
            tail[i] += tail[i - s]
        for i in range(s, n):
            tail[i] += tail[i - s]
    return Series(ring, out)


# -- fast table mod one prime ---------------------------------------------

def _table_mod_p(n_max: int, p: int) -> np.ndarray:
    """spt2(0..n_max) mod p; same recurrence as spt2_series in int64 lanes."""
    assert 2 < p < (1 << 31)
    n = n_max + 1
    tail = np.zeros(n, dtype=np.int64)
    tail[0] = 1
    out = np.zeros(n, dtype=np.int64)
    out_bound = 0
    limit = 1 << 62
    for s in range(n_max, 0, -1):
        if s % 2 == 0:
            kmax = n_max // s
            add_bound = (kmax * (kmax + 1) // 2) * (p - 1)
            if out_bound + add_bound >= limit:
                out %= p
                out_bound = p - 1
            for k in range(1, kmax + 1):
                base = k * s
                out[base:] += k * tail[:n - base]
            out_bound += add_bound
        tail[s:] += tail[:-s]
        if s <= 32:
            # 1/(1-q^s) is a running sum along each residue class mod s
            for r0 in range(s):
                v = tail[r0::s]
                np.cumsum(v, out=v)
        else:
            t = s
            while t <= n_max:
                tail[t:] += tail[:-t]
                t *= 2
        tail %= p
    out %= p
    return out


def _is_prime_small(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def _crt_primes(count: int) -> list[int]:
    """The largest `count` primes below 2^31, descending."""
    primes = []
    c = (1 << 31) - 1
    while len(primes) < count:
        if _is_prime_small(c):
            primes.append(c)
        c -= 2
    return primes


def _coefficient_bits(n_max: int) -> int:
    """Safe upper bound on bit length of spt2(n_max).

    spt2(n) <= n * pbar(n) and log pbar(n) ~ pi*sqrt(n), padded generously;
    the held-out verification prime would catch any shortfall.
    """
    import math
    return int(math.pi * math.sqrt(max(n_max, 1)) * math.log2(math.e)) + \
        max(n_max, 1).bit_length() + 64


def compute_table_values(n_max: int, threads: int = 1) -> list[int]:
    """Exact spt2(0..n_max) via CRT over word-size primes."""
    bits = _coefficient_bits(n_max)
    k = bits // 30 + 1
    primes = _crt_primes(k + 1)
    check_p = primes[-1]
    primes = primes[:k]

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            residues = list(pool.map(lambda p: _table_mod_p(n_max, p), primes + [check_p]))
    else:
        residues = [_table_mod_p(n_max, p) for p in primes + [check_p]]
    check_res = residues.pop()

    big_p = 1
    for p in primes:
        big_p *= p
    basis = []
    for p in primes:
        q = big_p // p
        basis.append(q * pow(q % p, -1, p))

    values = []
    for i in range(n_max + 1):
        x = sum(int(r[i]) * e for r, e in zip(residues, basis)) % big_p
        values.append(x)

    for i, v in enumerate(values):
        if v % check_p != int(check_res[i]):
            raise ArithmeticError(
                f"table reconstruction failed verification at n={i}")
    return values


# -- the table -------------------------------------------------------------

@dataclass(frozen=True)
class Spt2Table:
    """Exact spt2 values for 0..n_max with the oracle that produced them."""

    values: tuple[int, ...]
    oracle: str = "genfunc"   # "genfunc" or "enumeration"

    def __post_init__(self) -> None:
        assert self.oracle in ("genfunc", "enumeration")

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def spt2(self, n: int) -> int:
        if not 0 <= n <= self.n_max:
            raise IndexError(f"n={n} outside table range [0, {self.n_max}]")
        return self.values[n]

    def truncate(self, n_max: int) -> Spt2Table:
        assert n_max <= self.n_max
        return Spt2Table(self.values[:n_max + 1], self.oracle)

    def progression_order(self, a: int, b: int) -> int:
        """How many coefficients of sum_n spt2(a n + b) q^n the table supports."""
        assert a >= 1 and b >= 0
        if b > self.n_max:
            return 0
        return (self.n_max - b) // a + 1

    def progression_series(self, a: int, b: int, order: int,
                           ring: CoeffRing = ZZ) -> Series:
        """sum_n spt2(a n + b) q^n to the requested order."""
        if order > self.progression_order(a, b):
            raise ValueError(
                f"table up to {self.n_max} supports only "
                f"{self.progression_order(a, b)} coefficients of ({a} n + {b})")
        return Series(ring, [self.values[a * i + b] for i in range(order)])


def build_table(n_max: int, oracle: str = "genfunc", threads: int = 1) -> Spt2Table:
    if oracle == "enumeration":
        vals = tuple(spt2_enum(i) for i in range(n_max + 1))
        return Spt2Table(vals, "enumeration")
    assert oracle == "genfunc"
    return Spt2Table(tuple(compute_table_values(n_max, threads)), "genfunc")


# -- cache ------------------------------------------------------------------

def _zigzag_encode(v: int) -> int:
    return (v << 1) if v >= 0 else (((-v) << 1) - 1)


def _zigzag_decode(z: int) -> int:
    return (z >> 1) if (z & 1) == 0 else -((z + 1) >> 1)


def _write_varint(buf: bytearray, z: int) -> None:
    while True:
        b = z & 0x7F
        z >>= 7
        buf.append(b | (0x80 if z else 0))
        if not z:
            return


def _read_varint(data: bytes, pos: int) -> tuple[int, int]:
    z = 0
    shift = 0
    while True:
        if pos >= len(data):
            raise CacheError("truncated varint")
        b = data[pos]
        pos += 1
        z |= (b & 0x7F) << shift
        if not b & 0x80:
            return z, pos
        shift += 7


def save_table(table: Spt2Table, path: Path) -> None:
    buf = bytearray()
    buf += CACHE_MAGIC
    buf += CACHE_VERSION.to_bytes(4, "little")
    buf += table.n_max.to_bytes(8, "little")
    for v in table.values:
        _write_varint(buf, _zigzag_encode(v))
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_bytes(bytes(buf))
    tmp.replace(path)


def load_table(path: Path) -> Spt2Table:
    data = path.read_bytes()
    if data[:4] != CACHE_MAGIC:
        raise CacheError(f"bad magic in {path}")
    version = int.from_bytes(data[4:8], "little")
    if version != CACHE_VERSION:
        raise CacheError(f"unsupported cache version {version}")
    n_max = int.from_bytes(data[8:16], "little")
    pos = 16
    values = []
    for _ in range(n_max + 1):
        z, pos = _read_varint(data, pos)
        values.append(_zigzag_decode(z))
    if pos != len(data):
        raise CacheError(f"{len(data) - pos} trailing bytes in {path}")
    return Spt2Table(tuple(values), "genfunc")


def write_csv(table: Spt2Table, fileobj) -> None:
    fileobj.write("n,spt2(n)\n")
    for n, v in enumerate(table.values):
        fileobj.write(f"{n},{v}\n")


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "spt2q"


_MEMO: dict = {"table": None}


def get_table(n_max: int, cache_dir: Optional[Path] = None,
              threads: int = 1, use_cache: bool = True) -> Spt2Table:
    """A table covering 0..n_max, from memory, disk cache, or a fresh build."""
    memo = _MEMO["table"]
    if memo is not None and memo.n_max >= n_max:
        return memo.truncate(n_max)
    path = (cache_dir or default_cache_dir()) / f"spt2-v{CACHE_VERSION}.tbl"
    on_disk = None
    if use_cache and path.exists():
        try:
            on_disk = load_table(path)
        except (CacheError, OSError):
            on_disk = None
        if on_disk is not None and on_disk.n_max >= n_max:
            _MEMO["table"] = on_disk
            return on_disk.truncate(n_max)
    table = build_table(n_max, threads=threads)
    _MEMO["table"] = table
    # never shrink the cache file
    if use_cache and (on_disk is None or on_disk.n_max < table.n_max):
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            save_table(table, path)
        except OSError:
            pass
    return table
