"""Exact arithmetic for standard Young tableaux, binomial-basis dimension
polynomials, restricted tableau counts, and the alpha-shift bijections."""

from .partitions import Cell, Partition, parse_partition, partitions_of, prepend_row
from .tableaux import (
    RestrictionWindow,
    StandardTableau,
    count_restricted,
    dimension_hook,
    enumerate_restricted,
    enumerate_syt,
    hook_length,
    parse_tableau,
    satisfies_condition,
)
from .binomial import (
    BinomialPolynomial,
    CoefficientVector,
    a_coefficients,
    binomial,
    dimension_via_mu_identity,
    eval_f_large,
    evaluate,
    fit_binomial_coefficients,
)
from .bijections import (
    PivotP,
    PivotQ,
    chain_to_alpha,
    compute_p,
    compute_q,
    down_map,
    up_map,
)
from .verify import REGISTRY, VerificationReport, run_checks

__all__ = [
    "Cell", "Partition", "parse_partition", "partitions_of", "prepend_row",
    "RestrictionWindow", "StandardTableau", "count_restricted", "dimension_hook",
    "enumerate_restricted", "enumerate_syt", "hook_length", "parse_tableau",
    "satisfies_condition",
    "BinomialPolynomial", "CoefficientVector", "a_coefficients", "binomial",
    "dimension_via_mu_identity", "eval_f_large", "evaluate",
    "fit_binomial_coefficients",
    "PivotP", "PivotQ", "chain_to_alpha", "compute_p", "compute_q",
    "down_map", "up_map",
    "REGISTRY", "VerificationReport", "run_checks",
]
