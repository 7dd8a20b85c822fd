"""
Count tables: exact integer sequences indexed by polyomino size.

A ``CountTable`` holds ``values(n)`` for every ``0 <= n <= max_n``.  Tables
carry the convention ``values(0) = 1`` (``P(0) = 1`` and ``Q(0) = 1``), which
makes the convolution identities hold without special cases.  Counts are
Python integers; they exceed 64-bit range long before ``n = 56``, so every
serialized form writes them as decimal strings.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, Sequence, Tuple

from ..errors import TableError

#: Exact ratio of arbitrary-precision integers, always in lowest terms.
RationalScalar = Fraction


class Origin(str, Enum):
    ENUMERATED = "enumerated"
    INGESTED = "ingested"
    DERIVED = "derived"


@dataclass(frozen=True)
class CountTable:
    """Contiguous table of nonnegative counts for ``n = 0 .. max_n``."""

    counts: Tuple[int, ...]
    origin: Origin = Origin.INGESTED

    def __post_init__(self) -> None:
        if not self.counts:
            raise TableError("non-contiguous", "a table needs at least the n = 0 entry")
        for n, value in enumerate(self.counts):
            if not isinstance(value, int) or value < 0:
                raise TableError("malformed", f"count for n = {n} must be a nonnegative integer")

    @classmethod
    def from_counts(cls, counts: Iterable[int], origin: Origin = Origin.INGESTED) -> "CountTable":
        """Build a table from the counts for ``n = 1, 2, ...``; ``values(0) = 1`` is inserted."""
        return cls(counts=(1, *counts), origin=origin)

    @property
    def max_n(self) -> int:
        return len(self.counts) - 1

    @property
    def values(self) -> Dict[int, int]:
        return dict(enumerate(self.counts))

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.max_n:
            raise TableError("range", f"n = {n} outside 0..{self.max_n}")
        return self.counts[n]

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def items(self, start: int = 1) -> Iterator[Tuple[int, int]]:
        return ((n, self.counts[n]) for n in range(start, len(self.counts)))

    def truncated(self, max_n: int) -> "CountTable":
        if not 0 <= max_n <= self.max_n:
            raise TableError("range", f"cannot truncate a table of max_n {self.max_n} to {max_n}")
        return CountTable(counts=self.counts[: max_n + 1], origin=self.origin)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "origin": self.origin.value,
            "max_n": self.max_n,
            "values": {str(n): str(v) for n, v in self.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_tsv(self) -> str:
        return "".join(f"{n}\t{v}\n" for n, v in self.items())


def table_from_json(text: str) -> CountTable:
    """Rebuild a table from :meth:`CountTable.to_json` output."""

    try:
        raw = json.loads(text)
        origin = Origin(raw.get("origin", Origin.INGESTED.value))
        entries = {int(k): int(v) for k, v in raw["values"].items()}
        declared = raw.get("max_n")
    except (ValueError, KeyError, TypeError, AttributeError) as e:
        raise TableError("malformed", f"not a count-table JSON document: {e}") from e
    entries.pop(0, None)
    ordered = _contiguous(entries)
    if declared is not None and int(declared) != len(ordered):
        raise TableError("non-contiguous", f"max_n {declared} disagrees with {len(ordered)} values")
    return CountTable.from_counts(ordered, origin=origin)


def _contiguous(entries: Dict[int, int]) -> Sequence[int]:
    """Return ``entries`` as a list for ``n = 1 .. max`` or raise on a gap."""
    for n in range(1, len(entries) + 1):
        if n not in entries:
            raise TableError("non-contiguous", f"missing value for n = {n}")
    return [entries[n] for n in range(1, len(entries) + 1)]


def lift_int_digit_limit() -> None:
    """Allow int/str conversion of any length.

    Python 3.10.7+ refuses to print integers over 4300 digits by default; exact
    ``U(n)`` values pass that near ``n = 250``.
    """
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


def format_rational(value: Fraction) -> str:
    """Exact ``"p/q"`` text; integers are written without a denominator."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
