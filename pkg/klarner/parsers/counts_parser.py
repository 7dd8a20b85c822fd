"""
Parser for count-table files into a :class:`CountTable`.

Two line formats are accepted and may be mixed: ``n<whitespace>value`` and a
bare ``value``, which is taken as the entry following the previous line
(starting at ``n = 1``).  Lines starting with ``#`` and blank lines are
ignored.  A document starting with ``{`` is read as the JSON export of a
table, so JSON output of the toolkit can be fed back in.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, Iterable, TextIO, Union

from ..errors import TableError
from ..sequences.tables import CountTable, Origin, _contiguous, table_from_json

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
BUNDLED_TABLE = "fixed_polyominoes.tsv"


def _parse_int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise TableError("malformed", f"line {lineno}: {token!r} is not an integer") from None
    return value


def ingest_counts(source: Union[TextIO, Iterable[str]]) -> CountTable:
    """Read a count table from a text stream (or any iterable of lines).

    Raises
    ------
    TableError
        ``"malformed"`` for non-integer, negative or zero counts and
        unreadable lines, ``"duplicate"`` when an ``n`` repeats and
        ``"non-contiguous"`` when some ``n`` between 1 and the largest one is
        missing.
    """

    lines = list(source)
    head = "".join(lines).lstrip()
    if head.startswith("{"):
        table = table_from_json(head)
        _check_positive(table)
        return table

    entries: Dict[int, int] = {}
    next_n = 1
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 1:
            n, value = next_n, _parse_int(tokens[0], lineno)
        elif len(tokens) == 2:
            n, value = _parse_int(tokens[0], lineno), _parse_int(tokens[1], lineno)
        else:
            raise TableError("malformed", f"line {lineno}: expected 'n value' or 'value'")
        if n == 0:
            if value != 1:
                raise TableError("malformed", f"line {lineno}: the n = 0 entry must be 1")
            continue
        if n < 0:
            raise TableError("malformed", f"line {lineno}: negative index {n}")
        if value <= 0:
            raise TableError("malformed", f"line {lineno}: count {value} is not positive")
        if n in entries:
            raise TableError("duplicate", f"line {lineno}: n = {n} appears twice")
        entries[n] = value
        next_n = n + 1

    if not entries:
        raise TableError("malformed", "no counts found")
    table = CountTable.from_counts(_contiguous(entries), origin=Origin.INGESTED)
    logger.debug("ingested %d counts", table.max_n)
    return table


def _check_positive(table: CountTable) -> None:
    for n, value in table.items():
        if value <= 0:
            raise TableError("malformed", f"count {value} for n = {n} is not positive")


def parse_counts(source: Union[str, Path]) -> CountTable:
    """Parse a count table from a file path or from raw text.

    ``source`` may either be a filesystem path or the table content itself.
    When a path is supplied it must point to an existing file; otherwise the
    value is treated as content.
    """

    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source and _is_file(source)):
        with open(source, "r", encoding="utf-8") as fh:
            return ingest_counts(fh)
    return ingest_counts(str(source).splitlines(keepends=True))


def _is_file(text: str) -> bool:
    # one-line JSON tables can exceed the OS path length
    try:
        return Path(text).is_file()
    except (OSError, ValueError):
        return False


def load_counts(path: Union[str, Path, None] = None) -> CountTable:
    """Load the table at ``path``, or the packaged published table when ``None``."""

    if path is None:
        path = DATA_DIR / BUNDLED_TABLE
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"counts file not found: {path}")
    with open(path, "r", encoding="utf-8") as fh:
        return ingest_counts(fh)
