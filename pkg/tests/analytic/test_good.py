import numpy as np
import pytest

from q2lab.analytic import (
    early_good_fraction,
    good_degrees,
    good_edge_mask,
    good_edges,
)
from q2lab.cube import EdgeRef, all_squares, edge_index, n_edges, square_neighbors
from q2lab.process import InvalidClocksError, make_clocks, run_permutation, run_stream


def _brute_force(clocks, d):
    good = np.ones(n_edges(d), dtype=bool)
    for row in all_squares(d):
        good[row[np.argmax(clocks[row])]] = False
    return good


def test_d1_edge_is_good():
    assert good_edges(np.asarray([0.7]), 1).tolist() == [0]


def test_d2_all_but_the_latest():
    for k in range(20):
        clocks = make_clocks(run_stream(k), 2)
        expected = sorted(set(range(4)) - {int(np.argmax(clocks))})
        assert good_edges(clocks, 2).tolist() == expected


@pytest.mark.parametrize("d", [3, 5, 7])
def test_matches_brute_force(d):
    clocks = make_clocks(run_stream(d), d)
    assert np.array_equal(good_edge_mask(clocks, d), _brute_force(clocks, d))


def test_goodness_is_local():
    d = 5
    e = edge_index(EdgeRef(0b00100, 1), d)
    neighborhood = set(square_neighbors(EdgeRef(0b00100, 1), d)) | {e}
    clocks = make_clocks(run_stream(0), d)
    before = good_edge_mask(clocks, d)[e]
    rng = run_stream(1)
    for f in range(n_edges(d)):
        if f in neighborhood:
            continue
        clocks[f] = rng.random()
    assert good_edge_mask(clocks, d)[e] == before


@pytest.mark.parametrize("d", [4, 8, 10])
def test_good_edges_survive(d):
    for k in range(5):
        clocks = make_clocks(run_stream(k), d)
        result = run_permutation(d, clocks)
        good = good_edges(clocks, d)
        assert result.edge_mask[good].all()
        assert (result.degrees >= good_degrees(good, d)).all()


def test_degrees_and_early_fraction():
    d = 6
    clocks = make_clocks(run_stream(3), d)
    good = good_edges(clocks, d)
    assert good_degrees(good, d).sum() == 2 * good.size
    assert 0.0 <= early_good_fraction(clocks, d) <= 1.0


def test_invalid_clocks():
    with pytest.raises(InvalidClocksError):
        good_edge_mask(np.zeros(5), 2)
