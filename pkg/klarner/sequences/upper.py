"""
The majorizing sequence ``U(n)``.

``U(n) = P(n)`` for ``n <= n0``; beyond the cutoff

    U(n) = 1/(1 - R) * ( sum_{i=1}^{n0} Q(i) U(n - i)
                         + R * sum_{i=n0+1}^{n-1} U(i) U(n - i) )

with ``R = Q(n0)/P(n0)``.  Assuming ``Q(n)/P(n)`` decreases, ``U(n) >= P(n)``
for every ``n``.

Values are exact rationals.  Writing ``R = a/b`` in lowest terms and
``d = b - a``, every ``U(n)`` has a denominator dividing ``d ** (n - n0)``, so
the recurrence runs on the integers ``V(n) = U(n) * d ** max(0, n - n0)``:

    V(n) = b * L + a * B
    L = sum_{i=1}^{n0} Q(i) * (V(n-i) d^(i-1)          if n - i > n0
                               P(n-i) d^(n-n0-1)       otherwise)
    B = sum_{i=n0+1}^{n-1} (V(i) V(n-i) d^(n0-1)        if n - i > n0
                            V(i) P(n-i) d^(n-i-1)       otherwise)

The numerators grow by about ``log2(4 d)`` bits per step, which is what
bounds the default cap of 2000 terms.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from ..decimals import floor_root
from ..errors import TableError
from .tables import CountTable, format_rational, lift_int_digit_limit

logger = logging.getLogger(__name__)

U_CAP = 2000


@dataclass(frozen=True)
class USequence:
    """``U(0) .. U(n_max)`` stored as scaled integers ``V(n)`` and the scale base ``d``."""

    n0: int
    r: Fraction
    scaled: Tuple[int, ...]
    scale: int

    @property
    def n_max(self) -> int:
        return len(self.scaled) - 1

    def exponent(self, n: int) -> int:
        return max(0, n - self.n0)

    def value(self, n: int) -> Fraction:
        if not 0 <= n <= self.n_max:
            raise TableError("range", f"U({n}) outside 0..{self.n_max}")
        return Fraction(self.scaled[n], self.scale ** self.exponent(n))

    __getitem__ = value

    @property
    def values(self) -> Dict[int, Fraction]:
        return {n: self.value(n) for n in range(self.n_max + 1)}

    def to_dict(self) -> Dict[str, object]:
        lift_int_digit_limit()
        return {
            "n0": self.n0,
            "R": format_rational(self.r),
            "n_max": self.n_max,
            "values": {str(n): format_rational(self.value(n)) for n in range(1, self.n_max + 1)},
        }


def compute_u(p: CountTable, q: CountTable, n0: int, n_max: int, *, cap: int = U_CAP) -> USequence:
    """Evaluate ``U(0) .. U(n_max)`` exactly.

    Raises
    ------
    TableError
        ``"range"`` when ``n0`` is not covered by both tables, or ``n_max`` is
        below ``n0`` or above ``cap``; ``"divergent-prefactor"`` when ``R >= 1``.
    """

    if not 1 <= n0 <= min(p.max_n, q.max_n):
        raise TableError("range", f"n0 = {n0} outside 1..{min(p.max_n, q.max_n)}")
    if not n0 <= n_max <= cap:
        raise TableError("range", f"n_max = {n_max} outside {n0}..{cap}")
    r = Fraction(q[n0], p[n0])
    if r >= 1:
        raise TableError("divergent-prefactor", f"R = {format_rational(r)} is not below 1")

    a, b = r.numerator, r.denominator
    d = b - a
    powers: List[int] = [1]
    for _ in range(n_max):
        powers.append(powers[-1] * d)

    v: List[int] = [p[n] for n in range(n0 + 1)]
    for n in range(n0 + 1, n_max + 1):
        linear = 0
        for i in range(1, n0 + 1):
            j = n - i
            if j > n0:
                linear += q[i] * v[j] * powers[i - 1]
            else:
                linear += q[i] * p[j] * powers[n - n0 - 1]
        # pairs with both indices past n0, folded at i <= j
        both = 0
        for i in range(n0 + 1, n // 2 + 1):
            j = n - i
            if j <= n0:
                break
            both += v[i] * v[j] if i == j else 2 * v[i] * v[j]
        mixed = 0
        for i in range(max(n0 + 1, n - n0), n):
            j = n - i
            mixed += v[i] * p[j] * powers[j - 1]
        v.append(b * linear + a * (both * powers[n0 - 1] + mixed))
        if n % 100 == 0:
            logger.debug("U(%d): scaled numerator has %d bits", n, v[-1].bit_length())

    return USequence(n0=n0, r=r, scaled=tuple(v), scale=d)


def u_growth_ratio(u: USequence, n: int) -> Fraction:
    """``U(n) / U(n - 1)`` exactly."""

    if not 1 <= n <= u.n_max:
        raise TableError("range", f"ratio at n = {n} outside 1..{u.n_max}")
    shift = u.exponent(n) - u.exponent(n - 1)
    return Fraction(u.scaled[n], u.scaled[n - 1] * u.scale ** shift)


def u_nth_root(u: USequence, n: int, digits: int = 4) -> str:
    """``U(n) ** (1/n)`` rounded down to ``digits`` places."""

    if not 1 <= n <= u.n_max:
        raise TableError("range", f"root at n = {n} outside 1..{u.n_max}")
    return floor_root(u.value(n), n, digits)
