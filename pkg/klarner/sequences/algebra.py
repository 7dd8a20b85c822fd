"""
Exact sequence algebra on count tables.

``Q(n)``, the number of inconstructible polyominoes, follows from ``P`` by
inverting ``P(n) = sum_{i=1}^{n} Q(i) P(n - i)``:

    Q(n) = P(n) - sum_{i=1}^{n-1} Q(i) P(n - i)

All ratio comparisons are made on cross-multiplied integers; nothing in this
module touches floating point.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Tuple

from ..errors import TableError
from .tables import CountTable, Origin

logger = logging.getLogger(__name__)


def _require_unit_origin(table: CountTable, name: str) -> None:
    if table[0] != 1:
        raise TableError("malformed", f"{name}(0) must be 1, got {table[0]}")


def derive_q(p: CountTable) -> CountTable:
    """Derive the inconstructible counts ``Q`` from ``P``.

    Raises
    ------
    TableError
        ``"negative-Q"`` when some ``Q(n) < 0``, which means ``p`` is not a
        table of polyomino counts.
    """

    _require_unit_origin(p, "P")
    q = [1]
    for n in range(1, p.max_n + 1):
        value = p[n] - sum(q[i] * p[n - i] for i in range(1, n))
        if value < 0:
            raise TableError("negative-Q", f"Q({n}) = {value} < 0; input is not a polyomino table")
        q.append(value)
    return CountTable(counts=tuple(q), origin=Origin.DERIVED)


def recompose_p(q: CountTable) -> CountTable:
    """Rebuild ``P`` from ``Q`` through ``P(n) = sum_{i=1}^{n} Q(i) P(n - i)``."""

    _require_unit_origin(q, "Q")
    p = [1]
    for n in range(1, q.max_n + 1):
        p.append(sum(q[i] * p[n - i] for i in range(1, n + 1)))
    return CountTable(counts=tuple(p), origin=Origin.DERIVED)


@dataclass(frozen=True)
class MonotonicityScan:
    """Per-position outcome of a monotonicity check.

    ``ties`` lists the ``n`` where consecutive ratios are equal and
    ``violations`` those where the order is reversed.
    """

    holds: bool
    ties: Tuple[int, ...] = ()
    violations: Tuple[int, ...] = ()


def scan_ratios_increasing(p: CountTable) -> MonotonicityScan:
    """Compare ``P(n)/P(n-1)`` with ``P(n+1)/P(n)`` for ``2 <= n <= max_n - 1``.

    The check is strict: a tie counts against the conjecture.
    """

    if p.max_n < 2:
        raise TableError("insufficient", "need P up to n = 2 at least")
    ties: List[int] = []
    violations: List[int] = []
    for n in range(2, p.max_n):
        left, right = p[n] * p[n], p[n + 1] * p[n - 1]
        if left == right:
            ties.append(n)
        elif left > right:
            violations.append(n)
    if ties:
        logger.warning("P(n)/P(n-1) ties at n = %s", ", ".join(map(str, ties)))
    if violations:
        logger.warning("P(n)/P(n-1) decreases at n = %s", ", ".join(map(str, violations)))
    return MonotonicityScan(holds=not ties and not violations, ties=tuple(ties), violations=tuple(violations))


def ratios_increasing(p: CountTable) -> bool:
    return scan_ratios_increasing(p).holds


def scan_qp_decreasing(p: CountTable, q: CountTable) -> MonotonicityScan:
    """Compare ``Q(n)/P(n)`` with ``Q(n+1)/P(n+1)`` for ``1 <= n <= max_n - 1``.

    The check is non-strict, since equal ratios occur at ``n = 2, 3``; ties are
    reported but do not fail the scan.
    """

    top = min(p.max_n, q.max_n)
    if top < 2:
        raise TableError("insufficient", "need P and Q up to n = 2 at least")
    ties: List[int] = []
    violations: List[int] = []
    for n in range(1, top):
        left, right = q[n] * p[n + 1], q[n + 1] * p[n]
        if left == right:
            ties.append(n)
        elif left < right:
            violations.append(n)
    if ties:
        logger.info("Q(n)/P(n) ties at n = %s", ", ".join(map(str, ties)))
    if violations:
        logger.warning("Q(n)/P(n) increases at n = %s", ", ".join(map(str, violations)))
    return MonotonicityScan(holds=not violations, ties=tuple(ties), violations=tuple(violations))


def ratios_decreasing_qp(p: CountTable, q: CountTable) -> bool:
    return scan_qp_decreasing(p, q).holds


def supermultiplicative_violations(p: CountTable) -> List[Tuple[int, int]]:
    """Return every ``(l, m)`` with ``l + m <= max_n`` and ``P(l + m) < P(l) P(m)``."""

    return [
        (ell, m)
        for ell in range(1, p.max_n)
        for m in range(ell, p.max_n - ell + 1)
        if p[ell + m] < p[ell] * p[m]
    ]


class SplitBound(NamedTuple):
    ell: int
    ok: bool


def balanced_sizes(n: int) -> range:
    """The sizes ``l`` with ``(n - 1)/4 <= l <= (3n + 1)/4``."""
    return range((n - 1 + 3) // 4, (3 * n + 1) // 4 + 1)


def check_split_bound(p: CountTable, n: int) -> SplitBound:
    """Check ``P(n) <= 4 n^3 P(l) P(n - l)`` for the balanced ``l`` maximizing ``P(l) P(n - l)``.

    Ties go to the smallest maximizing ``l``.
    """

    if not 2 <= n <= p.max_n:
        raise TableError("range", f"n = {n} outside 2..{p.max_n}")
    best_ell, best = 0, -1
    for ell in balanced_sizes(n):
        product = p[ell] * p[n - ell]
        if product > best:
            best_ell, best = ell, product
    return SplitBound(ell=best_ell, ok=p[n] <= 4 * n ** 3 * best)


def composition_sum_bound(p: CountTable, n: int) -> bool:
    """Check ``P(n) <= sum over balanced l of 4 l (n - l) P(l) P(n - l)``."""

    if not 2 <= n <= p.max_n:
        raise TableError("range", f"n = {n} outside 2..{p.max_n}")
    total = sum(4 * ell * (n - ell) * p[ell] * p[n - ell] for ell in balanced_sizes(n))
    return p[n] <= total


def lambda_lower(p: CountTable) -> Fraction:
    """``P(max_n) / P(max_n - 1)``: a lower bound on Klarner's constant if the
    ratios ``P(n)/P(n-1)`` increase."""

    if p.max_n < 2:
        raise TableError("insufficient", "need P up to n = 2 at least")
    return Fraction(p[p.max_n], p[p.max_n - 1])
