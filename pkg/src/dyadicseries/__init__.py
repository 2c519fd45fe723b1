"""Exact arithmetic for a binomial double-sum sequence and its series.

The package computes the coefficients A(n) of a seven-binomial double sum,
manipulates truncated integer power series (including integer n-th root
extraction with first-failure reporting and an n-th power membership test
modulo mu(n) = n * rad(n)), and exhaustively verifies the 2-adic valuation
claims that make the generating series an exact square at any truncation
order.  All arithmetic is exact; there is no floating point anywhere.
"""

from .arith import (
    INFINITE,
    Valuation,
    binom,
    eq1_single_term,
    eq1_witness_L,
    is_power_of_two,
    v2_central_binom,
    vp_binom,
    vp_factorial,
)
from .sequence import (
    Decomposition,
    TermIndex,
    coefficient_A,
    coefficient_stream,
    decompose_A,
    generating_series,
    term,
    term_valuation,
)
from .series import (
    DEFAULT_FRONTIER_CAP,
    IntSeries,
    ResidueSeries,
    RootOutcome,
    RootStatus,
    SearchCapExceeded,
    format_series,
    heninger_check,
    is_one_mod,
    mu,
    mul_truncated,
    nth_root_integral,
    parse_series,
    pn_membership_mod,
    pow_truncated,
    reduce_mod,
)
from .verifier import (
    VerificationReport,
    verify_corollary,
    verify_eq1,
    verify_observation2,
    verify_theorem1,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "Valuation",
    "binom",
    "eq1_single_term",
    "eq1_witness_L",
    "is_power_of_two",
    "v2_central_binom",
    "vp_binom",
    "vp_factorial",
    "Decomposition",
    "TermIndex",
    "coefficient_A",
    "coefficient_stream",
    "decompose_A",
    "generating_series",
    "term",
    "term_valuation",
    "DEFAULT_FRONTIER_CAP",
    "IntSeries",
    "ResidueSeries",
    "RootOutcome",
    "RootStatus",
    "SearchCapExceeded",
    "format_series",
    "heninger_check",
    "is_one_mod",
    "mu",
    "mul_truncated",
    "nth_root_integral",
    "parse_series",
    "pn_membership_mod",
    "pow_truncated",
    "reduce_mod",
    "VerificationReport",
    "verify_corollary",
    "verify_eq1",
    "verify_observation2",
    "verify_theorem1",
]
