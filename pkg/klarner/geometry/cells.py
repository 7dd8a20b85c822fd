"""
Lattice cells and polyominoes.

A ``Cell`` is a pair ``(column, row)`` with the column increasing rightward and
the row increasing upward.  Cells compare lexicographically, column first and
then row: a cell is smaller than another if it lies on a column further left,
or on the same column and lower down.  Normalization and the text form use
this order; concatenation uses its own (see :mod:`klarner.geometry.compose`).

A ``Polyomino`` is a finite, nonempty, 4-connected set of cells stored in its
normalized form, the translate whose smallest cell is ``(0, 0)``.  Two cell
sets are translates of each other exactly when their normalized forms are
equal, so ``Polyomino`` equality is translation equivalence (fixed
polyominoes).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, NamedTuple, Tuple

from ..errors import GeometryError


class Cell(NamedTuple):
    column: int
    row: int

    def neighbours(self) -> Tuple["Cell", "Cell", "Cell", "Cell"]:
        """The four edge-adjacent cells, in increasing cell order."""
        c, r = self
        return (Cell(c - 1, r), Cell(c, r - 1), Cell(c, r + 1), Cell(c + 1, r))


STEPS: Tuple[Tuple[int, int], ...] = ((-1, 0), (0, -1), (0, 1), (1, 0))


@dataclass(frozen=True)
class Polyomino:
    """A normalized fixed polyomino.

    Instances are built through :func:`normalize` (or the enumeration module,
    which only produces normalized cell sets); the constructor itself does not
    re-validate.
    """

    cells: FrozenSet[Cell]

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.ordered())

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def ordered(self) -> List[Cell]:
        """Cells sorted in the lexicographic cell order."""
        return sorted(self.cells)

    @property
    def smallest(self) -> Cell:
        return min(self.cells)

    @property
    def largest(self) -> Cell:
        return max(self.cells)

    def translated(self, dc: int, dr: int) -> FrozenSet[Cell]:
        return frozenset(Cell(c + dc, r + dr) for c, r in self.cells)

    def to_text(self) -> str:
        return " ".join(f"{c},{r}" for c, r in self.ordered())

    def __str__(self) -> str:
        return self.to_text()


def _as_cells(cells: Iterable[Tuple[int, int]]) -> FrozenSet[Cell]:
    return frozenset(Cell(int(c), int(r)) for c, r in cells)


def is_connected(cells: Iterable[Tuple[int, int]]) -> bool:
    """Return ``True`` iff ``cells`` is 4-connected.

    The empty set is reported as not connected so that "connected" always
    implies "nonempty".
    """

    # hot path: called for every prefix split while counting Q(n) directly
    pool = cells if isinstance(cells, (set, frozenset)) else set(cells)
    if not pool:
        return False
    start = next(iter(pool))
    seen = {start}
    queue = deque([start])
    while queue:
        c, r = queue.popleft()
        for dc, dr in STEPS:
            nb = (c + dc, r + dr)
            if nb in pool and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return len(seen) == len(pool)


def normalize(cells: Iterable[Tuple[int, int]]) -> Polyomino:
    """Translate ``cells`` so that its smallest cell is ``(0, 0)``.

    Raises
    ------
    GeometryError
        ``"empty"`` for an empty input and ``"disconnected"`` when the cells
        are not 4-connected.
    """

    pool = _as_cells(cells)
    if not pool:
        raise GeometryError("empty", "a polyomino needs at least one cell")
    if not is_connected(pool):
        raise GeometryError("disconnected", "cells are not 4-connected")
    return _anchored(pool)


def _anchored(pool: FrozenSet[Cell]) -> Polyomino:
    """Normalize a cell set already known to be a connected polyomino."""
    c0, r0 = min(pool)
    if c0 == 0 and r0 == 0:
        return Polyomino(pool)
    return Polyomino(frozenset(Cell(c - c0, r - r0) for c, r in pool))


MONOMINO = Polyomino(frozenset({Cell(0, 0)}))
