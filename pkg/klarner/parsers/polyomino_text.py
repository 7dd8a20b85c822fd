"""Text form of polyominoes used on the command line.

One polyomino per line, cells as ``col,row`` pairs separated by whitespace,
for example ``"0,0 0,1 1,0"``.  Parsing normalizes.
"""

from __future__ import annotations

from typing import Iterable, List

from ..errors import GeometryError
from ..geometry.cells import Polyomino, normalize


def parse_polyomino(text: str) -> Polyomino:
    cells = []
    for token in text.split():
        parts = token.split(",")
        if len(parts) != 2:
            raise GeometryError("malformed", f"cell {token!r} is not a col,row pair")
        try:
            cells.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GeometryError("malformed", f"cell {token!r} is not a col,row pair") from None
    return normalize(cells)


def parse_polyominoes(lines: Iterable[str]) -> List[Polyomino]:
    """Parse one polyomino per nonblank line, skipping ``#`` comments."""
    return [
        parse_polyomino(line)
        for line in lines
        if line.strip() and not line.lstrip().startswith("#")
    ]
