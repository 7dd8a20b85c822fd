import json

import pytest

from conftest import EXAMPLES_DIR
from klarner.errors import TableError
from klarner.parsers import ingest_counts, load_counts, parse_counts
from klarner.sequences import CountTable, Origin, table_from_json


def test_ingest_pairs():
    table = ingest_counts(["1 1\n", "2 2\n", "3 6\n"])
    assert table.max_n == 3
    assert table[0] == 1
    assert table.values == {0: 1, 1: 1, 2: 2, 3: 6}
    assert table.origin is Origin.INGESTED


def test_ingest_bare_values_and_comments():
    table = parse_counts("# fixed polyominoes\n1\n2\n\n6\n19\n")
    assert list(table) == [1, 1, 2, 6, 19]


def test_ingest_accepts_leading_unit_entry():
    assert parse_counts("0 1\n1 1\n2 2\n").max_n == 2
    with pytest.raises(TableError):
        parse_counts("0 2\n1 1\n")


@pytest.mark.parametrize(
    "text, code",
    [
        ("1 1\n3 6\n", "non-contiguous"),
        ("1 1\n2 x\n", "malformed"),
        ("1 1\n2 -2\n", "malformed"),
        ("1 1\n2 0\n", "malformed"),
        ("1 1\n2 2\n2 2\n", "duplicate"),
        ("1 1 1\n", "malformed"),
        ("# nothing\n", "malformed"),
    ],
)
def test_ingest_errors(text, code):
    with pytest.raises(TableError) as excinfo:
        parse_counts(text)
    assert excinfo.value.code == code


def test_parse_counts_from_path(tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("1\t1\n2\t2\n3\t6\n", encoding="utf-8")
    assert parse_counts(path)[3] == 6
    assert parse_counts(str(path))[3] == 6


def test_bundled_table(bundled_p):
    assert bundled_p.max_n == 40
    assert bundled_p[10] == 36446
    assert bundled_p[40] == 17498111172838312982542


def test_load_counts_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_counts(tmp_path / "missing.tsv")


def test_json_export_round_trips(bundled_p):
    text = bundled_p.to_json()
    assert '"40": "17498111172838312982542"' in text
    assert table_from_json(text) == bundled_p
    assert parse_counts(text) == bundled_p


def test_parse_counts_single_line_json(bundled_p):
    text = json.dumps(bundled_p.to_dict())
    assert "\n" not in text and len(text) > 255
    assert parse_counts(text) == bundled_p


def test_tsv_export_round_trips(bundled_p):
    assert parse_counts(bundled_p.to_tsv()) == bundled_p


def test_table_json_rejects_gaps():
    with pytest.raises(TableError) as excinfo:
        table_from_json('{"origin": "derived", "max_n": 3, "values": {"1": "1", "3": "3"}}')
    assert excinfo.value.code == "non-contiguous"


def test_table_indexing_out_of_range():
    table = CountTable.from_counts([1, 2])
    with pytest.raises(TableError) as excinfo:
        table[3]
    assert excinfo.value.code == "range"
    assert table.truncated(1).max_n == 1


def test_example_toy_table(p_double_prime):
    table = load_counts(EXAMPLES_DIR / "toy_counts.tsv")
    assert table.values == p_double_prime.values
