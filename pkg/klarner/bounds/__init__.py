"""Conditional bounds on Klarner's constant from the polynomial ``g``."""

from .gpoly import GPolynomial, build_g, delta_nonneg, r_value
from .search import (
    ASSUMPTIONS,
    BoundReport,
    bound_report,
    find_theta,
    lambda_lower_root,
    lambda_upper,
)

__all__ = [
    "GPolynomial",
    "r_value",
    "build_g",
    "delta_nonneg",
    "find_theta",
    "lambda_upper",
    "lambda_lower_root",
    "ASSUMPTIONS",
    "BoundReport",
    "bound_report",
]
