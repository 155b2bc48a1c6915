"""Congruence claims against the spt2 table.

A CongruenceClaim says spt2(a*n + b) == 0 (mod modulus) for all n; a
FamilyClaim scales one claim by powers of two, spt2(a*2^j*n + b*2^j) == 0;
a PrimeFamilyClaim covers spt2(32*p^(2k+1)*m + 24*p^(2k+2)) == 0 (mod 4)
for primes p == 5, 7 (mod 8) and p not dividing m.  Verification is always
an exact table check; the prime family additionally replays the quadratic
form mechanism behind it (odd p-adic valuation of 4n+3 plus -2 being a
nonresidue mod p force 4n+3 != x^2 + 2y^2, hence the coefficient is even
twice over).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .arith import is_prime, jacobi, padic_valuation, represent_x2_2y2
from .spt import Spt2Table


@dataclass(frozen=True)
class CongruenceClaim:
    a: int
    b: int
    modulus: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 0:
            raise ValueError(f"progression {self.a}n+{self.b} is not valid")
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    def argument(self, n: int) -> int:
        return self.a * n + self.b


@dataclass(frozen=True)
class Violation:
    n: int
    argument: int
    residue: int

    def to_json_dict(self) -> dict:
        return {"n": self.n, "argument": self.argument, "residue": self.residue}


@dataclass(frozen=True)
class ClaimReport:
    claim: CongruenceClaim
    witnesses_checked: int
    violations: tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json_dict(self) -> dict:
        return {
            "claim": {"a": self.claim.a, "b": self.claim.b,
                      "modulus": self.claim.modulus},
            "status": self.status,
            "witnesses_checked": self.witnesses_checked,
            "violations": [v.to_json_dict() for v in self.violations],
        }


def verify_claim(claim: CongruenceClaim, table: Spt2Table,
                 n_max: Optional[int] = None,
                 max_violations: int = 10) -> ClaimReport:
    """Check spt2(a*n+b) == 0 (mod M) for n = 0..n_max (default: table extent)."""
    available = table.progression_order(claim.a, claim.b)
    if n_max is None:
        n_bound = available - 1
    else:
        if n_max >= available:
            raise ValueError(
                f"table up to {table.n_max} cannot reach n={n_max} "
                f"of progression {claim.a}n+{claim.b}")
        n_bound = n_max
    violations = []
    for n in range(n_bound + 1):
        arg = claim.argument(n)
        r = table.values[arg] % claim.modulus
        if r and len(violations) < max_violations:
            violations.append(Violation(n, arg, r))
    return ClaimReport(claim, n_bound + 1, tuple(violations))


# -- the fixed claim sets ---------------------------------------------------

PRIOR_CLAIMS: tuple[CongruenceClaim, ...] = (
    CongruenceClaim(3, 0, 3),
    CongruenceClaim(3, 1, 3),
    CongruenceClaim(5, 3, 5),
    CongruenceClaim(8, 3, 4),
    CongruenceClaim(16, 14, 4),
    CongruenceClaim(32, 28, 4),
)

THEOREM1_CLAIMS: tuple[CongruenceClaim, ...] = (
    CongruenceClaim(36, 30, 4),
    CongruenceClaim(48, 34, 4),
    CongruenceClaim(64, 56, 4),
    CongruenceClaim(72, 42, 4),
    CongruenceClaim(80, 34, 4),
    CongruenceClaim(80, 66, 4),
)


@dataclass(frozen=True)
class FamilyClaim:
    """spt2(a0*2^j*n + b0*2^j) == 0 (mod modulus) for all j, n >= 0."""

    name: str
    a0: int
    b0: int
    modulus: int = 4

    def instance(self, j: int) -> CongruenceClaim:
        assert j >= 0
        return CongruenceClaim(self.a0 << j, self.b0 << j, self.modulus)


FAMILY_CLAIMS: tuple[FamilyClaim, ...] = (
    FamilyClaim("if1", 16, 14),
    FamilyClaim("if2", 36, 30),
    FamilyClaim("if3", 48, 34),
    FamilyClaim("if6", 72, 42),
    FamilyClaim("if4", 80, 34),
    FamilyClaim("if5", 80, 66),
)


@dataclass(frozen=True)
class FamilyReport:
    family: FamilyClaim
    instances: tuple[tuple[int, ClaimReport], ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for _, r in self.instances)

    def to_json_dict(self) -> dict:
        return {
            "family": self.family.name,
            "status": "pass" if self.passed else "fail",
            "instances": [dict(j=j, **r.to_json_dict()) for j, r in self.instances],
        }


def verify_family(family: FamilyClaim, table: Spt2Table,
                  j_max: int, n_max: int) -> FamilyReport:
    instances = tuple(
        (j, verify_claim(family.instance(j), table, n_max)) for j in range(j_max + 1))
    return FamilyReport(family, instances)


@dataclass(frozen=True)
class InductionReport:
    """Replay of one doubling step j -> j+1 of a family.

    The step rewrites the (j+1)-instance argument A as 16u+10 with
    u = (A-10)/16 and halves it through the internal congruence
    spt2(16n+10) == spt2(8n+5) (mod 4).  u is generally not an integer
    (u_integral records this); what the table can certify is that A/2 is
    exactly the j-instance argument and that both congruence legs hold:
    spt2(A) == spt2(A/2) and spt2(A/2) == 0 (mod 4).
    """

    family: FamilyClaim
    j: int
    n_checked: int
    u_integral: bool
    argument_halves: bool
    internal_leg: ClaimReport        # spt2(A) - spt2(A/2) == 0, encoded below
    hypothesis_leg: ClaimReport
    internal_violations: tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return (self.argument_halves and not self.internal_violations
                and self.hypothesis_leg.passed)

    def to_json_dict(self) -> dict:
        return {
            "family": self.family.name,
            "j": self.j,
            "status": "pass" if self.passed else "fail",
            "n_checked": self.n_checked,
            "u_integral": self.u_integral,
            "argument_halves": self.argument_halves,
            "internal_leg_violations": [v.to_json_dict() for v in self.internal_violations],
            "hypothesis_leg": self.hypothesis_leg.to_json_dict(),
        }


def verify_induction_step(family: FamilyClaim, j: int, table: Spt2Table,
                          n_max: int) -> InductionReport:
    nxt = family.instance(j + 1)
    cur = family.instance(j)
    # A = a(j+1)n + b(j+1) halves onto the j-instance iff both parts double
    argument_halves = (nxt.a == 2 * cur.a and nxt.b == 2 * cur.b)
    u_integral = (nxt.a % 16 == 0 and (nxt.b - 10) % 16 == 0)
    internal_violations = []
    for n in range(n_max + 1):
        big = nxt.argument(n)
        assert big % 2 == 0
        diff = (table.spt2(big) - table.spt2(big // 2)) % family.modulus
        if diff and len(internal_violations) < 10:
            internal_violations.append(Violation(n, big, diff))
    hypothesis_leg = verify_claim(cur, table, n_max)
    internal_leg = verify_claim(nxt, table, n_max)
    return InductionReport(family, j, n_max + 1, u_integral, argument_halves,
                           internal_leg, hypothesis_leg, tuple(internal_violations))


@dataclass(frozen=True)
class PrimeFamilyClaim:
    """spt2(32 p^(2k+1) m + 24 p^(2k+2)) == 0 (mod 4), p == 5,7 (mod 8), p∤m."""

    p: int
    k_max: int
    m_max: int
    modulus: int = 4

    def __post_init__(self) -> None:
        if not is_prime(self.p) or self.p <= 3:
            raise ValueError(f"p must be a prime > 3, got {self.p}")
        if self.p % 8 not in (5, 7):
            raise ValueError(f"p must be 5 or 7 mod 8, got {self.p} == {self.p % 8} mod 8")


@dataclass(frozen=True)
class PrimeInstance:
    k: int
    m: int
    argument: int
    n: int                   # argument = 32n + 24
    quad_n: int              # 4n + 3 = p^(2k+1) (4m + 3p)
    valuation: int
    jacobi_minus2: int
    representable: bool
    residue: int

    @property
    def mechanism_ok(self) -> bool:
        return (self.valuation % 2 == 1 and self.jacobi_minus2 == -1
                and not self.representable)

    @property
    def passed(self) -> bool:
        return self.residue == 0 and self.mechanism_ok

    def to_json_dict(self) -> dict:
        return {
            "k": self.k, "m": self.m, "argument": self.argument,
            "quad_n": self.quad_n, "valuation": self.valuation,
            "jacobi_minus2": self.jacobi_minus2,
            "representable": self.representable,
            "residue": self.residue,
            "status": "pass" if self.passed else "fail",
        }


@dataclass(frozen=True)
class PrimeFamilyReport:
    claim: PrimeFamilyClaim
    instances: tuple[PrimeInstance, ...]

    @property
    def passed(self) -> bool:
        return bool(self.instances) and all(i.passed for i in self.instances)

    def to_json_dict(self) -> dict:
        return {
            "p": self.claim.p,
            "status": "pass" if self.passed else "fail",
            "instances": [i.to_json_dict() for i in self.instances],
        }


def verify_prime_family(claim: PrimeFamilyClaim, table: Spt2Table) -> PrimeFamilyReport:
    """Exact table check of every instance plus the quadratic form mechanism."""
    p = claim.p
    instances = []
    for k in range(claim.k_max + 1):
        pk1 = p ** (2 * k + 1)
        for m in range(1, claim.m_max + 1):
            if m % p == 0:
                continue
            arg = 32 * pk1 * m + 24 * pk1 * p
            if arg > table.n_max:
                raise ValueError(
                    f"instance k={k}, m={m} needs spt2({arg}) beyond table "
                    f"extent {table.n_max}")
            assert (arg - 24) % 32 == 0
            n = (arg - 24) // 32
            quad_n = 4 * n + 3
            assert quad_n == pk1 * (4 * m + 3 * p)
            instances.append(PrimeInstance(
                k=k, m=m, argument=arg, n=n, quad_n=quad_n,
                valuation=padic_valuation(quad_n, p),
                jacobi_minus2=jacobi(-2, p),
                representable=represent_x2_2y2(quad_n).representable,
                residue=table.spt2(arg) % claim.modulus,
            ))
    return PrimeFamilyReport(claim, tuple(instances))


# -- scanning ---------------------------------------------------------------

@dataclass(frozen=True)
class ScanHit:
    """A progression with every tabulated value divisible by the modulus."""

    a: int
    b: int
    modulus: int
    witnesses: int
    subsumed_by: Optional[tuple[int, int]]

    def to_json_dict(self) -> dict:
        return {
            "a": self.a, "b": self.b, "modulus": self.modulus,
            "witnesses": self.witnesses,
            "subsumed_by": list(self.subsumed_by) if self.subsumed_by else None,
        }


def scan(table: Spt2Table, modulus: int, a_max: int,
         n_min: int) -> list[ScanHit]:
    """All progressions a <= a_max, 0 <= b < a that vanish mod `modulus`.

    Progressions with fewer than n_min table witnesses are skipped.  A hit
    is flagged with the lexicographically first hit (a', b') it refines:
    a' | a, a' < a, b == b' (mod a').
    """
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    residues = [v % modulus for v in table.values]
    hits: list[tuple[int, int, int]] = []
    hit_set: set[tuple[int, int]] = set()
    for a in range(1, a_max + 1):
        for b in range(a):
            witnesses = table.progression_order(a, b)
            if witnesses < n_min:
                continue
            if any(residues[b::a]):
                continue
            hits.append((a, b, witnesses))
            hit_set.add((a, b))
    out = []
    for a, b, witnesses in hits:
        parent = None
        for a2 in range(1, a):
            if a % a2 == 0 and (a2, b % a2) in hit_set:
                parent = (a2, b % a2)
                break
        out.append(ScanHit(a, b, modulus, witnesses, parent))
    return out
