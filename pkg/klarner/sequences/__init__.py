"""Count tables, the P/Q relation, conjecture checks and the U sequence."""

from .algebra import (
    MonotonicityScan,
    SplitBound,
    check_split_bound,
    composition_sum_bound,
    derive_q,
    lambda_lower,
    ratios_decreasing_qp,
    ratios_increasing,
    recompose_p,
    scan_qp_decreasing,
    scan_ratios_increasing,
    supermultiplicative_violations,
)
from .tables import CountTable, Origin, RationalScalar, format_rational, lift_int_digit_limit, table_from_json
from .upper import U_CAP, USequence, compute_u, u_growth_ratio, u_nth_root

__all__ = [
    "CountTable",
    "Origin",
    "RationalScalar",
    "format_rational",
    "lift_int_digit_limit",
    "table_from_json",
    "derive_q",
    "recompose_p",
    "MonotonicityScan",
    "scan_ratios_increasing",
    "ratios_increasing",
    "scan_qp_decreasing",
    "ratios_decreasing_qp",
    "supermultiplicative_violations",
    "SplitBound",
    "check_split_bound",
    "composition_sum_bound",
    "lambda_lower",
    "U_CAP",
    "USequence",
    "compute_u",
    "u_growth_ratio",
    "u_nth_root",
]
