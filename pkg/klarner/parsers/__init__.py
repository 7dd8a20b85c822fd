"""Readers for count tables and the polyomino text form."""

from .counts_parser import BUNDLED_TABLE, DATA_DIR, ingest_counts, load_counts, parse_counts
from .polyomino_text import parse_polyomino, parse_polyominoes

__all__ = [
    "DATA_DIR",
    "BUNDLED_TABLE",
    "ingest_counts",
    "parse_counts",
    "load_counts",
    "parse_polyomino",
    "parse_polyominoes",
]
