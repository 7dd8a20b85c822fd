"""
The polynomial ``g(x) = sum_{i=0}^{n0} (Q(i) - R P(i)) x^i`` and the
discriminant predicate.

The generating function ``f(x) = sum U(n) x^n`` satisfies a quadratic whose
discriminant is nonnegative where ``g(x) <= 2 - 2 sqrt(R)``.  That inequality
is decided here without square roots: since ``2 - 2 sqrt(R) >= 0``, it holds
iff ``g(x) <= 2`` and ``(2 - g(x))^2 >= 4R``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from ..errors import BoundError
from ..sequences.tables import CountTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GPolynomial:
    """Exact coefficients of ``g``; ``monotone`` is set when all of them are nonnegative."""

    coefficients: Tuple[Fraction, ...]
    n0: int
    r: Fraction
    monotone: bool

    def evaluate(self, x: Union[int, Fraction], method: str = "horner") -> Fraction:
        """Evaluate ``g(x)`` exactly.

        ``method`` is ``"horner"`` (nested multiplication) or ``"terms"``
        (sum of ``c_i x^i``); both give the same canonical rational.
        """

        x = Fraction(x)
        if method == "horner":
            acc = Fraction(0)
            for c in reversed(self.coefficients):
                acc = acc * x + c
            return acc
        if method == "terms":
            return sum((c * x ** i for i, c in enumerate(self.coefficients)), Fraction(0))
        raise BoundError("unsupported", f"unknown evaluation method {method!r}")

    __call__ = evaluate

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


def r_value(p: CountTable, q: CountTable, n0: int) -> Fraction:
    """``R = Q(n0) / P(n0)`` in lowest terms."""

    top = min(p.max_n, q.max_n)
    if not 1 <= n0 <= top:
        raise BoundError("range", f"n0 = {n0} outside 1..{top}")
    return Fraction(q[n0], p[n0])


def build_g(p: CountTable, q: CountTable, n0: int) -> GPolynomial:
    r = r_value(p, q, n0)
    coefficients = tuple(q[i] - r * p[i] for i in range(n0 + 1))
    negative = [i for i, c in enumerate(coefficients) if c < 0]
    if negative:
        logger.warning(
            "g has negative coefficients at i = %s; Q(i)/P(i) drops below R before n0",
            ", ".join(map(str, negative)),
        )
    return GPolynomial(coefficients=coefficients, n0=n0, r=r, monotone=not negative)


def delta_nonneg(g: GPolynomial, x: Union[int, Fraction]) -> bool:
    """Decide ``g(x) <= 2 - 2 sqrt(R)`` exactly for ``x >= 0``."""

    x = Fraction(x)
    if x < 0:
        raise BoundError("domain", "g is only evaluated at nonnegative x")
    gx = g.evaluate(x)
    return gx <= 2 and (2 - gx) ** 2 >= 4 * g.r
