import random

import networkx as nx
import pytest

from klarner.errors import GeometryError
from klarner.geometry import Cell, Polyomino, is_connected, normalize
from klarner.parsers import parse_polyomino, parse_polyominoes


def test_normalize_single_cell():
    assert normalize({(5, 3)}).cells == frozenset({Cell(0, 0)})


def test_normalize_translates_smallest_cell_to_origin():
    poly = normalize({(1, 1), (1, 2), (2, 1)})
    assert poly.cells == frozenset({(0, 0), (0, 1), (1, 0)})


def test_normalize_anchor_is_lexicographic_not_bounding_box():
    # smallest cell (0, 1) in column 0; the bounding box corner (0, 0) is empty
    poly = normalize({(0, 1), (1, 1), (1, 0)})
    assert poly.cells == frozenset({(0, 0), (1, 0), (1, -1)})
    assert poly.smallest == (0, 0)


def test_normalize_rejects_empty_and_disconnected():
    with pytest.raises(GeometryError) as excinfo:
        normalize([])
    assert excinfo.value.code == "empty"
    with pytest.raises(GeometryError) as excinfo:
        normalize({(0, 0), (1, 1)})
    assert excinfo.value.code == "disconnected"


def test_normalize_idempotent_and_translation_invariant(random_cells):
    rng = random.Random(20240601)
    for _ in range(1000):
        cells = random_cells(rng, rng.randint(1, 8))
        poly = normalize(cells)
        assert normalize(poly.cells) == poly
        dc, dr = rng.randint(-50, 50), rng.randint(-50, 50)
        assert normalize({(c + dc, r + dr) for c, r in cells}) == poly


def test_is_connected():
    assert is_connected({(0, 0), (0, 1)})
    assert not is_connected({(0, 0), (1, 1)})
    assert not is_connected({(0, 0), (2, 0)})
    assert not is_connected(set())


def test_is_connected_agrees_with_networkx(random_cells):
    rng = random.Random(7)
    for _ in range(500):
        cells = random_cells(rng, rng.randint(2, 10))
        subset = set(rng.sample(sorted(cells), rng.randint(1, len(cells))))
        graph = nx.Graph()
        graph.add_nodes_from(subset)
        graph.add_edges_from(
            (cell, (cell[0] + dc, cell[1] + dr))
            for cell in subset
            for dc, dr in ((1, 0), (0, 1))
            if (cell[0] + dc, cell[1] + dr) in subset
        )
        assert is_connected(subset) == nx.is_connected(graph)


def test_cell_order_is_column_then_row():
    assert Cell(0, 5) < Cell(1, -5)
    assert Cell(2, -1) < Cell(2, 0)
    assert Cell(0, 0).neighbours() == ((-1, 0), (0, -1), (0, 1), (1, 0))


def test_text_form_round_trip():
    poly = parse_polyomino("3,4 3,5 4,4")
    assert poly.to_text() == "0,0 0,1 1,0"
    assert str(poly) == poly.to_text()
    assert parse_polyomino(poly.to_text()) == poly


def test_parse_rejects_bad_tokens():
    with pytest.raises(GeometryError) as excinfo:
        parse_polyomino("0,0 1;0")
    assert excinfo.value.code == "malformed"
    with pytest.raises(GeometryError):
        parse_polyomino("0,0 a,b")
    with pytest.raises(GeometryError) as excinfo:
        parse_polyomino("0,0 0,2")
    assert excinfo.value.code == "disconnected"


def test_parse_polyominoes_skips_comments():
    polys = parse_polyominoes(["# two dominoes\n", "0,0 0,1\n", "\n", "0,0 1,0\n"])
    assert [len(p) for p in polys] == [2, 2]
    assert polys[0] != polys[1]


def test_polyomino_iterates_in_cell_order():
    poly = Polyomino(frozenset({Cell(1, 0), Cell(0, 1), Cell(0, 0)}))
    assert list(poly) == [(0, 0), (0, 1), (1, 0)]
    assert poly.largest == (1, 0)
    assert Cell(0, 1) in poly
