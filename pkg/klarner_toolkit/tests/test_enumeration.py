import pytest

from klarner.enumeration import (
    count_fixed,
    count_inconstructible,
    for_each_polyomino,
    grow_naive,
    iter_polyominoes,
)
from klarner.errors import EnumerationError
from klarner.geometry import MONOMINO, is_connected
from klarner.sequences import Origin, derive_q

FIRST_COUNTS = [1, 2, 6, 19, 63, 216, 760, 2725, 9910, 36446, 135268, 505861]


def test_count_fixed_small():
    table = count_fixed(4, workers=1)
    assert [table[n] for n in range(1, 5)] == [1, 2, 6, 19]
    assert table[0] == 1
    assert table.origin is Origin.ENUMERATED


def test_count_fixed_matches_published_table(bundled_p):
    table = count_fixed(12, workers=1)
    assert list(table.items()) == list(bundled_p.truncated(12).items())
    assert [v for _, v in table.items()] == FIRST_COUNTS


def test_count_fixed_independent_of_worker_count():
    assert count_fixed(11, workers=1) == count_fixed(11, workers=2) == count_fixed(11, workers=3)


def test_count_fixed_limit():
    with pytest.raises(EnumerationError) as excinfo:
        count_fixed(17)
    assert excinfo.value.code == "limit"
    with pytest.raises(EnumerationError):
        count_fixed(0)
    with pytest.raises(EnumerationError):
        count_fixed(6, limit=5)


def test_enumerated_counts_supermultiplicative_and_growing():
    table = count_fixed(12, workers=1)
    for ell in range(1, 12):
        for m in range(1, 13 - ell):
            assert table[ell + m] >= table[ell] * table[m]
    assert all(table[n + 1] > table[n] for n in range(1, 12))


@pytest.mark.parametrize("n", range(1, 9))
def test_canonical_growth_agrees_with_naive_growth(n):
    streamed = set(iter_polyominoes(n))
    assert streamed == grow_naive(n)
    assert len(streamed) == FIRST_COUNTS[n - 1]


def test_for_each_polyomino_visits_each_shape_once():
    seen = []
    assert for_each_polyomino(1, seen.append) == 1
    assert seen == [MONOMINO]

    seen = []
    assert for_each_polyomino(4, seen.append) == 19
    assert len(set(seen)) == 19
    assert all(p.smallest == (0, 0) and is_connected(p.cells) for p in seen)


def test_visit_count_equals_count_fixed():
    counts = count_fixed(10, workers=1)
    for n in range(1, 11):
        assert for_each_polyomino(n, lambda p: None) == counts[n]


def test_stream_limit():
    with pytest.raises(EnumerationError) as excinfo:
        iter_polyominoes(14)
    assert excinfo.value.code == "limit"
    with pytest.raises(EnumerationError):
        for_each_polyomino(3, print, limit=2)


def test_count_inconstructible_small():
    q = count_inconstructible(3)
    assert [q[n] for n in range(1, 4)] == [1, 1, 3]


def test_direct_inconstructible_counts_match_recurrence(bundled_p):
    direct = count_inconstructible(11)
    derived = derive_q(bundled_p.truncated(11))
    assert direct.counts == derived.counts
    assert [direct[n] for n in range(1, 12)] == [1, 1, 3, 8, 24, 76, 252, 860, 2997, 10618, 38125]
