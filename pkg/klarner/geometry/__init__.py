"""Lattice cells, polyominoes, concatenation and compositions."""

from .cells import MONOMINO, Cell, Polyomino, is_connected, normalize
from .compose import (
    compositions,
    concat,
    constructible_splits,
    factorize,
    is_constructible,
    row_order,
    split_concatenation,
)
from .decompose import SplitResult, decompose_balanced

__all__ = [
    "Cell",
    "Polyomino",
    "MONOMINO",
    "normalize",
    "is_connected",
    "concat",
    "row_order",
    "is_constructible",
    "constructible_splits",
    "split_concatenation",
    "factorize",
    "compositions",
    "SplitResult",
    "decompose_balanced",
]
