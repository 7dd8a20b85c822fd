from pathlib import Path
import os
import sys

import pytest

# Ensure the package root is on sys.path
sys.path.insert(0, str(Path(__file__).resolve().parents[2]))

from klarner.parsers import load_counts  # noqa: E402
from klarner.sequences import CountTable, derive_q  # noqa: E402

EXAMPLES_DIR = Path(__file__).resolve().parents[1] / "examples"

# Exact values printed with the published 56-term run.
P55 = 17326987021737904384935434351490
P56 = 69150714562532896936574425480218


def _published_table_path():
    env = os.environ.get("KLARNER_JENSEN56")
    if env:
        return Path(env)
    return EXAMPLES_DIR / "jensen56.tsv"


@pytest.fixture(scope="session")
def bundled_p() -> CountTable:
    return load_counts()


@pytest.fixture(scope="session")
def bundled_q(bundled_p) -> CountTable:
    return derive_q(bundled_p)


@pytest.fixture(scope="session")
def published_p() -> CountTable:
    path = _published_table_path()
    if not path.is_file():
        pytest.skip("56-term count table not available (set KLARNER_JENSEN56)")
    table = load_counts(path)
    if table.max_n < 56:
        pytest.skip(f"{path} stops at n = {table.max_n}")
    return table.truncated(56)


@pytest.fixture
def p_prime() -> CountTable:
    return CountTable.from_counts([1, 2, 7])


@pytest.fixture
def p_double_prime() -> CountTable:
    return CountTable.from_counts([1, 2, 6, 16])


def _random_cells(rng, size):
    cells = {(0, 0)}
    while len(cells) < size:
        c, r = rng.choice(sorted(cells))
        dc, dr = rng.choice([(-1, 0), (1, 0), (0, -1), (0, 1)])
        cells.add((c + dc, r + dr))
    return cells


@pytest.fixture
def random_cells():
    """Grow a random connected cell set from ``(0, 0)`` with the given ``random.Random``."""
    return _random_cells
