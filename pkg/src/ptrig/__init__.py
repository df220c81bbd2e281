"""Generalized p-trigonometric functions and their basis properties.

Evaluation of sin_p/cos_p and relatives with certified accuracy, Fourier
coefficients of the rescaled p-cosine system with analytic tail bounds,
the truncated change-of-coordinates operator, Riemann zeta on (1, oo),
and the two threshold equations whose roots delimit the proven basis
range of the p-cosine family.
"""

from .basis_operator import (
    CosineVector,
    TruncatedBasisOp,
    apply_dilation,
    build_truncated_operator,
    expand_in_pcosine,
    isometry_check,
    reconstruct_check,
)
from .config import DEFAULT_CONFIG, EvalConfig
from .core import (
    PExponent,
    c_p,
    cos_p,
    d2cos_p,
    dcos_p,
    exp_p,
    incomplete_F,
    m_p,
    pi_p,
    sin_p,
    u_p,
    v_p,
)
from .errors import (
    BracketError,
    ConvergenceError,
    DomainError,
    InsufficientCoefficients,
)
from .fourier import (
    KIND_COSINE,
    KIND_SINE,
    CoeffTable,
    CriterionReport,
    basis_criterion,
    bound_check_large_p,
    bound_check_small_p,
    coeff_relation_check,
    coeff_table,
    compare_bounds,
    cosine_coeff,
    sine_coeff,
    tail_remainder_bound,
)
from .regularity import (
    RegularityReport,
    decay_slope,
    regularity_report,
    sine_bound_check_large_p,
    sine_bound_check_small_p,
    sobolev_partial,
)
from .thresholds import (
    LOWER_THRESHOLD_RHS,
    RootResult,
    convexity_scan,
    lower_threshold_lhs,
    odd_reciprocal_sum,
    solve_lower_threshold,
    solve_upper_threshold,
    upper_threshold_lhs,
    zeta,
    zeta_three_halves_sandwich,
)

__version__ = "0.1.0"

__all__ = [
    "BracketError",
    "CoeffTable",
    "ConvergenceError",
    "CosineVector",
    "CriterionReport",
    "DEFAULT_CONFIG",
    "DomainError",
    "EvalConfig",
    "InsufficientCoefficients",
    "KIND_COSINE",
    "KIND_SINE",
    "LOWER_THRESHOLD_RHS",
    "PExponent",
    "RegularityReport",
    "RootResult",
    "TruncatedBasisOp",
    "apply_dilation",
    "basis_criterion",
    "bound_check_large_p",
    "bound_check_small_p",
    "build_truncated_operator",
    "c_p",
    "coeff_relation_check",
    "coeff_table",
    "compare_bounds",
    "convexity_scan",
    "cos_p",
    "cosine_coeff",
    "d2cos_p",
    "dcos_p",
    "decay_slope",
    "exp_p",
    "expand_in_pcosine",
    "incomplete_F",
    "isometry_check",
    "lower_threshold_lhs",
    "m_p",
    "odd_reciprocal_sum",
    "pi_p",
    "reconstruct_check",
    "regularity_report",
    "sin_p",
    "sine_bound_check_large_p",
    "sine_bound_check_small_p",
    "sine_coeff",
    "sobolev_partial",
    "solve_lower_threshold",
    "solve_upper_threshold",
    "tail_remainder_bound",
    "u_p",
    "upper_threshold_lhs",
    "v_p",
    "zeta",
    "zeta_three_halves_sandwich",
]
