"""Exact q-series toolkit for congruences of the overpartition
smallest-parts function spt2(n)."""

from spt2q.arith import (
    count_odd_representations,
    is_prime,
    jacobi,
    padic_valuation,
    represent_x2_2y2,
)
from spt2q.dissect import IdentityClaim, check_identity, dissect, reassemble
from spt2q.exprlang import expr_series, lower_to_product, parse_expression, pretty
from spt2q.fixtures import builtin_fixtures, parse_fixture_line, run_fixture
from spt2q.products import (
    EtaMonomial,
    ProductExpr,
    expand_eta,
    expand_expr,
    theta_phi,
    theta_psi,
)
from spt2q.series import ZZ, CoeffRing, Series
from spt2q.spt import (
    Spt2Table,
    build_table,
    get_table,
    spt2_enum,
    spt2_series,
)
from spt2q.verify import (
    FAMILY_CLAIMS,
    PRIOR_CLAIMS,
    THEOREM1_CLAIMS,
    CongruenceClaim,
    FamilyClaim,
    PrimeFamilyClaim,
    scan,
    verify_claim,
    verify_family,
    verify_induction_step,
    verify_prime_family,
)

__version__ = "0.1.0"

__all__ = [
    "CoeffRing",
    "CongruenceClaim",
    "EtaMonomial",
    "FAMILY_CLAIMS",
    "FamilyClaim",
    "IdentityClaim",
    "PRIOR_CLAIMS",
    "PrimeFamilyClaim",
    "ProductExpr",
    "Series",
    "Spt2Table",
    "THEOREM1_CLAIMS",
    "ZZ",
    "build_table",
    "builtin_fixtures",
    "check_identity",
    "count_odd_representations",
    "dissect",
    "expand_eta",
    "expand_expr",
    "expr_series",
    "get_table",
    "is_prime",
    "jacobi",
    "lower_to_product",
    "padic_valuation",
    "parse_expression",
    "parse_fixture_line",
    "pretty",
    "reassemble",
    "represent_x2_2y2",
    "run_fixture",
    "scan",
    "spt2_enum",
    "spt2_series",
    "theta_phi",
    "theta_psi",
    "verify_claim",
    "verify_family",
    "verify_induction_step",
    "verify_prime_family",
]
