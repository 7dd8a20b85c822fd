"""
Concatenation, constructibility and compositions of polyominoes.

Concatenation orders cells row first, then column (lowest row first, leftmost
first within a row).  ``concat(X, Y)`` translates both polyominoes so that the
last cell of ``X`` in that order sits directly under the first cell of ``Y``.
All of ``X`` then lies in rows up to ``r`` and all of ``Y`` in rows from
``r + 1``; in row ``r`` the cells of ``X`` are at or left of the joining
column, in row ``r + 1`` the cells of ``Y`` are at or right of it, so the
joining edge is the only edge between ``X`` and ``Y``.

Two consequences follow.  If ``c1 < ... < cn`` are the cells of ``W`` in this
order, ``W = concat(X, Y)`` exactly when ``X`` is a prefix ``c1..ck`` and
``Y`` the suffix, with ``c(k+1)`` directly above ``ck`` and both parts
connected, so constructibility needs only the ``n - 1`` prefix splits.  And
the split at the smallest such ``k`` is the only one whose prefix is itself
inconstructible, which is what makes ``P(n) = sum_{i=1}^{n} Q(i) P(n - i)``
count every constructible polyomino once.

Placing the last cell of ``X`` under the first cell of ``Y`` in the
column-first order used for normalization does not have this property: the
2x2 square splits both as monomino + L-tromino and as L-tromino + monomino
with inconstructible first factors.

A composition is any disjoint, connected union of a translate of ``X`` and a
translate of ``Y``.  Connectivity forces some cell of ``Y`` to touch some cell
of ``X``, so at most ``4 * |X| * |Y|`` offsets need to be tried.  Different
offsets can give translates of the same polyomino; results are deduplicated by
normalized form.
"""

from __future__ import annotations

from typing import FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

from .cells import STEPS, Cell, Polyomino, _anchored, is_connected


def _row_key(cell: Cell) -> Tuple[int, int]:
    return cell.row, cell.column


def row_order(cells: Iterable[Cell]) -> List[Cell]:
    """Cells sorted row first, then column."""
    return sorted(cells, key=_row_key)


def concat(x: Polyomino, y: Polyomino) -> Polyomino:
    """Concatenate ``x`` and ``y``: the last cell of ``x`` right under the first cell of ``y``."""

    lc, lr = max(x.cells, key=_row_key)
    sc, sr = min(y.cells, key=_row_key)
    dc, dr = sc - lc, sr - 1 - lr
    union = frozenset(Cell(c + dc, r + dr) for c, r in x.cells) | y.cells
    return _anchored(union)


def _split_points(cells: List[Cell]) -> Iterator[int]:
    for k in range(1, len(cells)):
        lower, upper = cells[k - 1], cells[k]
        if upper.column != lower.column or upper.row != lower.row + 1:
            continue
        if is_connected(cells[:k]) and is_connected(cells[k:]):
            yield k


def constructible_splits(w: Polyomino) -> List[int]:
    """Return every prefix length ``k`` (cells in row order) at which ``w`` splits as a concatenation."""
    return list(_split_points(row_order(w.cells)))


def is_constructible(w: Polyomino) -> bool:
    """Return ``True`` iff ``w`` is the concatenation of two smaller polyominoes."""
    return next(_split_points(row_order(w.cells)), None) is not None


def split_concatenation(w: Polyomino) -> Optional[Tuple[Polyomino, Polyomino]]:
    """Split ``w`` at its smallest concatenation point.

    The first factor of this split is inconstructible.  Returns ``None`` when
    ``w`` itself is inconstructible.
    """

    splits = constructible_splits(w)
    if not splits:
        return None
    cells = row_order(w.cells)
    k = splits[0]
    return _anchored(frozenset(cells[:k])), _anchored(frozenset(cells[k:]))


def factorize(w: Polyomino) -> List[Polyomino]:
    """Decompose ``w`` into inconstructible factors.

    ``concat(f1, concat(f2, ... concat(f(m-1), fm)))`` reproduces ``w``; this is
    the decomposition counted by ``P(n) = sum Q(i) P(n - i)``.
    """

    factors: List[Polyomino] = []
    rest: Optional[Polyomino] = w
    while rest is not None:
        split = split_concatenation(rest)
        if split is None:
            factors.append(rest)
            rest = None
        else:
            head, rest = split
            factors.append(head)
    return factors


def compositions(x: Polyomino, y: Polyomino) -> Set[Polyomino]:
    """Return all distinct polyominoes that are compositions of ``x`` and ``y``."""

    found: Set[Polyomino] = set()
    tried: Set[Tuple[int, int]] = set()
    x_cells: FrozenSet[Cell] = x.cells
    for xc, xr in x_cells:
        for dc, dr in STEPS:
            tc, tr = xc + dc, xr + dr
            if (tc, tr) in x_cells:
                continue
            for yc, yr in y.cells:
                offset = (tc - yc, tr - yr)
                if offset in tried:
                    continue
                tried.add(offset)
                moved = y.translated(*offset)
                if moved.isdisjoint(x_cells):
                    found.add(_anchored(x_cells | moved))
    return found
