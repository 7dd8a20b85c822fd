"""
Canonical growth enumeration of fixed polyominoes.

Cells live on a half plane: a cell ``(c, r)`` is admissible iff ``c > 0`` or
``c == 0 and r >= 0``, so the origin is the smallest cell of every polyomino
grown from it and each generated cell set is already normalized.  A cell is
stored as the integer ``c * stride + r + size`` with ``stride = 2 * size + 1``;
the admissible cells are then exactly the indices ``>= size`` and the four
neighbours of an index are ``+-1`` and ``+-stride``.

The search keeps a set of *untried* cells and a *marked* array holding every
cell that was ever offered as untried.  Popping an untried cell adds it to the
polyomino; its unmarked admissible neighbours become new untried cells for the
subtree below.  Each fixed polyomino containing the origin as its smallest
cell is produced exactly once, so counting never stores shapes.

For parallel counts the top levels of the search tree are expanded in the
calling process, and each pending subtree is handed to a worker as a
self-contained snapshot of ``(untried, marked)``.  Subtree counts are summed,
which keeps the result independent of the worker count.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, FrozenSet, Iterator, List, NamedTuple, Optional, Set, Tuple, Union

from ..errors import EnumerationError
from ..geometry.cells import MONOMINO, STEPS, Cell, Polyomino, _anchored
from ..geometry.compose import is_constructible
from ..sequences.tables import CountTable, Origin
from .cache import load_cached_counts, store_counts

logger = logging.getLogger(__name__)

COUNT_LIMIT = 16
STREAM_LIMIT = 13

# Subtrees are cut at this polyomino size when counting in parallel.
SPLIT_SIZE = 7


class _Lattice:
    """Index arithmetic and the marked array for polyominoes up to ``size`` cells."""

    def __init__(self, size: int) -> None:
        self.size = size
        self.stride = 2 * size + 1
        self.origin = size
        self.marked = bytearray((size + 1) * self.stride)

    def fresh_neighbours(self, idx: int) -> List[int]:
        """Unmarked admissible neighbours of ``idx``; marks them."""
        fresh = []
        for nb in (idx - self.stride, idx - 1, idx + 1, idx + self.stride):
            if nb >= self.origin and not self.marked[nb]:
                self.marked[nb] = 1
                fresh.append(nb)
        return fresh

    def release(self, cells: List[int]) -> None:
        for nb in cells:
            self.marked[nb] = 0

    def to_cell(self, idx: int) -> Cell:
        column, rest = divmod(idx, self.stride)
        return Cell(column, rest - self.size)

    def to_polyomino(self, placed: List[int]) -> Polyomino:
        return Polyomino(frozenset(self.to_cell(idx) for idx in placed))


class _Branch(NamedTuple):
    """A pending subtree: the search state on entering it."""

    untried: Tuple[int, ...]
    marked: FrozenSet[int]
    placed: int


def _count(lattice: _Lattice, untried: List[int], placed: int, n_max: int, counts: List[int]) -> None:
    size = placed + 1
    while untried:
        idx = untried.pop()
        counts[size] += 1
        if size < n_max:
            fresh = lattice.fresh_neighbours(idx)
            if size == n_max - 1:
                # every child is a leaf
                counts[n_max] += len(untried) + len(fresh)
            else:
                _count(lattice, untried + fresh, size, n_max, counts)
            lattice.release(fresh)


def _expand(
    lattice: _Lattice, untried: List[int], placed: int, n_max: int, counts: List[int], out: List[_Branch]
) -> None:
    if placed == SPLIT_SIZE:
        marked = frozenset(i for i, m in enumerate(lattice.marked) if m)
        out.append(_Branch(tuple(untried), marked, placed))
        return
    size = placed + 1
    while untried:
        idx = untried.pop()
        counts[size] += 1
        fresh = lattice.fresh_neighbours(idx)
        _expand(lattice, untried + fresh, size, n_max, counts, out)
        lattice.release(fresh)


def _count_branch(job: Tuple[int, _Branch]) -> List[int]:
    n_max, branch = job
    lattice = _Lattice(n_max)
    for idx in branch.marked:
        lattice.marked[idx] = 1
    counts = [0] * (n_max + 1)
    _count(lattice, list(branch.untried), branch.placed, n_max, counts)
    return counts


def _check_limit(n: int, limit: int) -> None:
    if not 1 <= n <= limit:
        raise EnumerationError("limit", f"n = {n} outside 1..{limit}")


def _count_serial(n_max: int) -> List[int]:
    lattice = _Lattice(n_max)
    lattice.marked[lattice.origin] = 1
    counts = [0] * (n_max + 1)
    _count(lattice, [lattice.origin], 0, n_max, counts)
    return counts


def _count_parallel(n_max: int, workers: int) -> List[int]:
    lattice = _Lattice(n_max)
    lattice.marked[lattice.origin] = 1
    counts = [0] * (n_max + 1)
    branches: List[_Branch] = []
    _expand(lattice, [lattice.origin], 0, n_max, counts, branches)
    logger.info("counting %d subtrees of size %d with %d workers", len(branches), SPLIT_SIZE, workers)

    jobs = [(n_max, branch) for branch in branches]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for done, partial in enumerate(pool.map(_count_branch, jobs, chunksize=16), start=1):
            for size in range(SPLIT_SIZE + 1, n_max + 1):
                counts[size] += partial[size]
            if done % 100 == 0:
                logger.debug("%d/%d subtrees counted", done, len(jobs))
    return counts


def count_fixed(
    n_max: int,
    *,
    limit: int = COUNT_LIMIT,
    workers: Optional[int] = None,
    cache_path: Union[str, Path, None] = None,
) -> CountTable:
    """Count fixed polyominoes of every size ``1 .. n_max``.

    Parameters
    ----------
    n_max:
        Largest size counted.
    limit:
        Refuse sizes above this; counting time grows by about four per cell.
    workers:
        Worker processes; ``None`` uses every core, ``1`` counts in-process.
    cache_path:
        Optional count cache, reused when it covers ``n_max`` and extended
        otherwise.

    Raises
    ------
    EnumerationError
        ``"limit"`` when ``n_max`` is outside ``1 .. limit``.
    """

    _check_limit(n_max, limit)
    if cache_path is not None:
        cached = load_cached_counts(cache_path)
        if cached is not None and cached.max_n >= n_max:
            logger.info("using cached counts from %s", cache_path)
            return cached.truncated(n_max)

    if workers is None:
        workers = os.cpu_count() or 1
    if workers > 1 and n_max > SPLIT_SIZE + 2:
        counts = _count_parallel(n_max, workers)
    else:
        counts = _count_serial(n_max)
    table = CountTable.from_counts(counts[1:], origin=Origin.ENUMERATED)

    if cache_path is not None:
        store_counts(cache_path, table)
    return table


def _stream(lattice: _Lattice, untried: List[int], placed: List[int], n_max: int) -> Iterator[List[int]]:
    while untried:
        idx = untried.pop()
        placed.append(idx)
        yield placed
        if len(placed) < n_max:
            fresh = lattice.fresh_neighbours(idx)
            yield from _stream(lattice, untried + fresh, placed, n_max)
            lattice.release(fresh)
        placed.pop()


def iter_polyominoes(n_max: int, *, limit: int = STREAM_LIMIT, every_size: bool = False) -> Iterator[Polyomino]:
    """Yield normalized polyominoes of size ``n_max`` (or of every size up to it).

    The limit is checked on the call, before iteration starts.
    """

    _check_limit(n_max, limit)
    lattice = _Lattice(n_max)
    lattice.marked[lattice.origin] = 1
    return (
        lattice.to_polyomino(placed)
        for placed in _stream(lattice, [lattice.origin], [], n_max)
        if every_size or len(placed) == n_max
    )


def for_each_polyomino(n: int, visitor: Callable[[Polyomino], object], *, limit: int = STREAM_LIMIT) -> int:
    """Call ``visitor`` once per fixed polyomino of ``n`` cells; return the number of calls."""

    visits = 0
    for poly in iter_polyominoes(n, limit=limit):
        visitor(poly)
        visits += 1
    return visits


def count_inconstructible(n_max: int, *, limit: int = STREAM_LIMIT) -> CountTable:
    """Count, for each size up to ``n_max``, the polyominoes that are not concatenations."""

    polyominoes = iter_polyominoes(n_max, limit=limit, every_size=True)
    counts = [0] * (n_max + 1)
    for poly in polyominoes:
        if not is_constructible(poly):
            counts[len(poly)] += 1
    logger.debug("inconstructible counts: %s", counts[1:])
    return CountTable.from_counts(counts[1:], origin=Origin.ENUMERATED)


def grow_naive(n: int, *, limit: int = STREAM_LIMIT) -> Set[Polyomino]:
    """All polyominoes of ``n`` cells by adding cells one at a time and deduplicating."""

    _check_limit(n, limit)
    level: Set[Polyomino] = {MONOMINO}
    for _ in range(n - 1):
        grown: Set[Polyomino] = set()
        for poly in level:
            for c, r in poly.cells:
                for dc, dr in STEPS:
                    nb = Cell(c + dc, r + dr)
                    if nb not in poly.cells:
                        grown.add(_anchored(poly.cells | {nb}))
        level = grown
    return level
