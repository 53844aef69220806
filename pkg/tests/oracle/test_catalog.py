import pytest

from q2lab.cube import DimensionError, all_squares, n_edges
from q2lab.oracle import (
    OracleRefusedError,
    SquareMasks,
    enumerate_saturated,
    mask_to_edges,
)


def test_d1():
    catalog = enumerate_saturated(1)
    assert catalog.members == [(0,)]
    assert catalog.size_histogram == {1: 1}


def test_d2():
    catalog = enumerate_saturated(2)
    assert len(catalog) == 4
    assert catalog.size_histogram == {3: 4}


def test_d3():
    catalog = enumerate_saturated(3)
    histogram = catalog.size_histogram
    assert max(histogram) == 9
    assert histogram[9] == 8
    squares = SquareMasks(3)
    for edges in catalog.masks:
        assert squares.is_saturated(edges)
    payload = catalog.as_dict()
    assert payload["n_members"] == len(catalog)
    assert sum(payload["size_histogram"].values()) == len(catalog)


def test_square_masks():
    squares = SquareMasks(3)
    assert squares.n_edges == n_edges(3)
    assert squares.full == (1 << 12) - 1
    assert squares.open_edges(0) == list(range(12))
    assert not squares.is_q2_free(squares.full)
    for row in all_squares(3):
        edges = sum(1 << int(k) for k in row[:3])
        assert squares.is_q2_free(edges)
        assert squares.completes_square(int(row[3]), edges)
        assert int(row[3]) not in squares.open_edges(edges)


def test_mask_to_edges():
    assert mask_to_edges(0) == ()
    assert mask_to_edges(0b101001) == (0, 3, 5)


def test_refused():
    with pytest.raises(OracleRefusedError):
        enumerate_saturated(4)
    with pytest.raises(ValueError):
        enumerate_saturated(5)
    with pytest.raises(DimensionError):
        SquareMasks(0)
