import logging

from klarner.enumeration import count_fixed, load_cached_counts, store_counts
from klarner.sequences import CountTable, Origin


def test_store_and_load_round_trip(tmp_path):
    path = tmp_path / "counts.tsv"
    table = CountTable.from_counts([1, 2, 6, 19], origin=Origin.ENUMERATED)
    store_counts(path, table)
    text = path.read_text(encoding="utf-8")
    assert text.splitlines()[1].startswith("# sha256 ")
    assert text.endswith("4\t19\n")
    assert load_cached_counts(path) == table
    assert list(tmp_path.iterdir()) == [path]


def test_missing_cache_is_none(tmp_path):
    assert load_cached_counts(tmp_path / "absent.tsv") is None


def test_tampered_cache_is_rejected(tmp_path, caplog):
    path = tmp_path / "counts.tsv"
    store_counts(path, CountTable.from_counts([1, 2, 6], origin=Origin.ENUMERATED))
    path.write_text(path.read_text(encoding="utf-8").replace("3\t6", "3\t7"), encoding="utf-8")
    with caplog.at_level(logging.WARNING):
        assert load_cached_counts(path) is None
    assert "checksum" in caplog.text


def test_count_fixed_uses_and_extends_cache(tmp_path):
    path = tmp_path / "cache" / "counts.tsv"
    first = count_fixed(6, workers=1, cache_path=path)
    assert load_cached_counts(path) == first

    # a cache covering the request is trusted as is
    store_counts(path, CountTable.from_counts([1, 2, 6, 19, 63, 216, 760], origin=Origin.ENUMERATED))
    assert count_fixed(5, workers=1, cache_path=path)[5] == 63

    extended = count_fixed(8, workers=1, cache_path=path)
    assert extended[8] == 2725
    assert load_cached_counts(path).max_n == 8
