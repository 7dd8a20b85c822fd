"""
Balanced decomposition of a polyomino into two connected parts.

Every polyomino of ``n >= 2`` cells is a composition of two polyominoes of
``l`` and ``n - l`` cells with ``(n - 1)/4 <= l <= (3n + 1)/4``.  The split is
found on a spanning tree of the cell adjacency graph: the cells of any subtree
are connected through tree edges, and so are the remaining cells, because
removing a subtree from a tree leaves a tree.  Each cell has at most four
neighbours, which bounds the branching and guarantees a subtree of suitable
size exists.

The tree is the depth-first tree rooted at the smallest cell, exploring
neighbours in cell order; the chosen subtree is the first vertex in
depth-first postorder whose subtree size is in range.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

import networkx as nx

from ..errors import GeometryError
from .cells import Cell, Polyomino, _anchored

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitResult:
    part_a: FrozenSet[Cell]
    part_b: FrozenSet[Cell]
    size_a: int

    def polyominoes(self) -> Tuple[Polyomino, Polyomino]:
        """Both parts as normalized polyominoes."""
        return _anchored(self.part_a), _anchored(self.part_b)


def adjacency_graph(w: Polyomino) -> nx.Graph:
    """Return the cell adjacency graph of ``w`` with nodes added in cell order."""

    graph = nx.Graph()
    ordered = w.ordered()
    graph.add_nodes_from(ordered)
    for cell in ordered:
        for nb in cell.neighbours():
            if nb in w.cells:
                graph.add_edge(cell, nb)
    return graph


def in_balance_range(size_a: int, n: int) -> bool:
    return n - 1 <= 4 * size_a <= 3 * n + 1


def decompose_balanced(w: Polyomino) -> SplitResult:
    """Split ``w`` into two connected parts of balanced size.

    Raises
    ------
    GeometryError
        ``"too small"`` for a monomino.
    """

    n = len(w)
    if n < 2:
        raise GeometryError("too small", "a balanced split needs at least two cells")

    root = w.smallest
    tree = nx.dfs_tree(adjacency_graph(w), source=root)
    subtree_size: Dict[Cell, int] = {}
    chosen = None
    for cell in nx.dfs_postorder_nodes(tree, source=root):
        subtree_size[cell] = 1 + sum(subtree_size[child] for child in tree.successors(cell))
        if chosen is None and in_balance_range(subtree_size[cell], n):
            chosen = cell

    if chosen is None:
        # the tree argument rules this out for any connected input
        raise GeometryError("disconnected", "no balanced subtree found")

    part_a = frozenset(nx.descendants(tree, chosen)) | {chosen}
    part_b = w.cells - part_a
    logger.debug("split %s at %s: %d + %d", w.to_text(), chosen, len(part_a), len(part_b))
    return SplitResult(part_a=part_a, part_b=part_b, size_a=len(part_a))
