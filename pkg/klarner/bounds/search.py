"""
Search for the largest decimal ``theta`` with ``g(theta) <= 2 - 2 sqrt(R)``
and assembly of the conditional bounds on Klarner's constant.

With nonnegative coefficients ``g`` is non-decreasing on ``[0, inf)``, so the
predicate holds on an initial segment and a binary search over the integer
numerators ``k`` of ``k / 10^digits`` finds its end.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

from ..decimals import ceil_decimal, floor_decimal, floor_root, parse_decimal
from ..errors import BoundError
from ..sequences.algebra import lambda_lower
from ..sequences.tables import CountTable, format_rational
from .gpoly import GPolynomial, build_g, delta_nonneg

logger = logging.getLogger(__name__)

MAX_DIGITS = 12

ASSUMPTIONS = {"upper": "Q/P decreasing", "lower": "P ratio increasing"}


def find_theta(g: GPolynomial, digits: int = 5) -> str:
    """Largest ``k / 10^digits`` at which :func:`delta_nonneg` holds, as a decimal string.

    Raises
    ------
    BoundError
        ``"range"`` for ``digits`` outside ``1 .. 12``, ``"unsupported"`` when
        ``g`` has a negative coefficient, ``"no-theta"`` when ``R >= 1`` or the
        predicate already fails at ``10^-digits``, ``"unbounded"`` when ``g`` is
        constant.
    """

    if not 1 <= digits <= MAX_DIGITS:
        raise BoundError("range", f"digits = {digits} outside 1..{MAX_DIGITS}")
    if not g.monotone:
        raise BoundError("unsupported", "g has negative coefficients; the search needs a non-decreasing g")
    if g.r >= 1:
        raise BoundError("no-theta", f"R = {format_rational(g.r)} leaves no room below 2 - 2 sqrt(R)")
    if all(c == 0 for c in g.coefficients[1:]):
        raise BoundError("unbounded", "g is constant, the predicate never fails")

    scale = 10 ** digits

    def holds(k: int) -> bool:
        return delta_nonneg(g, Fraction(k, scale))

    if not holds(1):
        raise BoundError("no-theta", f"predicate fails already at 10^-{digits}")
    lo, hi = 1, scale
    while holds(hi):
        lo, hi = hi, hi * 2
    logger.debug("theta bracket [%d, %d] / 10^%d", lo, hi, digits)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if holds(mid):
            lo = mid
        else:
            hi = mid
    return floor_decimal(Fraction(lo, scale), digits)


def lambda_upper(theta: str, digits: int = 4) -> str:
    """``1 / theta`` rounded up to ``digits`` places."""

    if digits < 0:
        raise BoundError("range", f"digits = {digits} is negative")
    value = parse_decimal(theta)
    if value <= 0:
        raise BoundError("domain", f"theta = {theta} is not positive")
    return ceil_decimal(1 / value, digits)


def lambda_lower_root(p: CountTable, digits: int = 4) -> str:
    """``P(max_n) ** (1/max_n)`` rounded down; a lower bound on lambda without conjectures."""
    return floor_root(p[p.max_n], p.max_n, digits)


@dataclass(frozen=True)
class BoundReport:
    n0: int
    r: Fraction
    theta: str
    digits: int
    lambda_upper: str
    lambda_lower: str
    assumes: Dict[str, str] = field(default_factory=lambda: dict(ASSUMPTIONS))

    def to_dict(self) -> Dict[str, object]:
        return {
            "n0": self.n0,
            "R": format_rational(self.r),
            "theta": self.theta,
            "digits": self.digits,
            "lambda_upper": self.lambda_upper,
            "lambda_lower": self.lambda_lower,
            "assumes": dict(self.assumes),
        }


def bound_report(
    p: CountTable,
    q: CountTable,
    n0: Optional[int] = None,
    digits: int = 5,
    lambda_digits: int = 4,
) -> BoundReport:
    """Run the whole pipeline: ``R``, ``g``, ``theta``, then both bounds on lambda.

    ``n0`` defaults to the largest size both tables cover.
    """

    if n0 is None:
        n0 = min(p.max_n, q.max_n)
    g = build_g(p, q, n0)
    theta = find_theta(g, digits)
    lower = lambda_lower(p.truncated(n0))
    logger.info("n0 = %d, theta = %s", n0, theta)
    return BoundReport(
        n0=n0,
        r=g.r,
        theta=theta,
        digits=digits,
        lambda_upper=lambda_upper(theta, lambda_digits),
        lambda_lower=floor_decimal(lower, lambda_digits),
    )
