"""Exhaustive generation and counting of fixed polyominoes."""

from .cache import load_cached_counts, store_counts
from .redelmeier import (
    COUNT_LIMIT,
    STREAM_LIMIT,
    count_fixed,
    count_inconstructible,
    for_each_polyomino,
    grow_naive,
    iter_polyominoes,
)

__all__ = [
    "COUNT_LIMIT",
    "STREAM_LIMIT",
    "count_fixed",
    "for_each_polyomino",
    "iter_polyominoes",
    "count_inconstructible",
    "grow_naive",
    "load_cached_counts",
    "store_counts",
]
