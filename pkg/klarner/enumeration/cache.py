"""
On-disk cache of enumerated counts.

The file is a count table in the usual ``n<TAB>count`` format preceded by a
``# sha256 <hex>`` line covering the data lines.  A file whose checksum does
not match is ignored and recomputed.
"""

from __future__ import annotations

import hashlib
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional, Union

from ..errors import KlarnerError
from ..parsers.counts_parser import ingest_counts
from ..sequences.tables import CountTable, Origin

logger = logging.getLogger(__name__)

HEADER = "# klarner fixed-polyomino counts\n"
CHECKSUM_PREFIX = "# sha256 "


def _digest(data: str) -> str:
    return hashlib.sha256(data.encode("utf-8")).hexdigest()


def store_counts(path: Union[str, Path], table: CountTable) -> None:
    """Write ``table`` to ``path`` atomically (temporary file, then ``os.replace``)."""

    path = Path(path)
    data = table.to_tsv()
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=path.name, suffix=".tmp", dir=str(path.parent))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(HEADER)
            fh.write(f"{CHECKSUM_PREFIX}{_digest(data)}\n")
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    logger.info("cached counts up to n = %d in %s", table.max_n, path)


def load_cached_counts(path: Union[str, Path]) -> Optional[CountTable]:
    """Return the cached table, or ``None`` when missing, unreadable or failing its checksum."""

    path = Path(path)
    if not path.is_file():
        logger.info("no count cache at %s", path)
        return None
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.readlines()

    expected = None
    data_lines = []
    for line in lines:
        if line.startswith(CHECKSUM_PREFIX):
            expected = line[len(CHECKSUM_PREFIX):].strip()
        elif not line.startswith("#"):
            data_lines.append(line)

    if expected is None or _digest("".join(data_lines)) != expected:
        logger.warning("checksum: ignoring count cache %s", path)
        return None
    try:
        table = ingest_counts(data_lines)
    except KlarnerError as e:
        logger.warning("ignoring unreadable count cache %s: %s", path, e)
        return None
    return CountTable(counts=table.counts, origin=Origin.ENUMERATED)
