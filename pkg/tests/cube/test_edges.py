import numpy as np
import pytest

from q2lab.cube import (
    DimensionError,
    EdgeRef,
    InvalidEdgeError,
    NonAdjacentError,
    all_edges,
    check_dim,
    edge_between,
    edge_endpoints,
    edge_from_index,
    edge_index,
    edge_indices,
    n_edges,
    n_vertices,
)


def test_counts():
    assert n_edges(3) == 12
    assert n_vertices(3) == 8
    for d in range(1, 11):
        assert n_edges(d) == d * 2 ** (d - 1)


def test_single_edge():
    assert n_edges(1) == 1
    assert edge_index(EdgeRef(0, 0), 1) == 0
    assert edge_from_index(0, 1) == EdgeRef(0, 0)


@pytest.mark.parametrize("d", range(1, 7))
def test_index_bijection(d):
    seen = set()
    for base in range(1 << d):
        for i in range(d):
            if base >> i & 1:
                continue
            e = EdgeRef(base, i)
            idx = edge_index(e, d)
            assert 0 <= idx < n_edges(d)
            assert edge_from_index(idx, d) == e
            seen.add(idx)
    assert seen == set(range(n_edges(d)))


def test_vectorized_matches_scalar():
    d = 5
    idx = np.arange(n_edges(d))
    u, v, dirs = edge_endpoints(idx, d)
    for k in idx:
        e = edge_from_index(int(k), d)
        assert (u[k], dirs[k]) == e
        assert v[k] == e.base | 1 << e.dir
    assert np.array_equal(edge_indices(u, dirs, d), idx)

    u_all, v_all, _ = all_edges(d)
    assert np.array_equal(u_all, u) and np.array_equal(v_all, v)


def test_edge_between():
    assert edge_between(0b101, 0b100, 3) == EdgeRef(0b100, 0)
    with pytest.raises(NonAdjacentError):
        edge_between(0b000, 0b011, 3)
    with pytest.raises(NonAdjacentError):
        edge_between(5, 5, 3)


def test_invalid_edges():
    with pytest.raises(InvalidEdgeError):
        edge_index(EdgeRef(0b001, 0), 3)
    with pytest.raises(InvalidEdgeError):
        edge_index(EdgeRef(0, 3), 3)
    with pytest.raises(InvalidEdgeError):
        edge_index(EdgeRef(8, 1), 3)
    with pytest.raises(InvalidEdgeError):
        edge_from_index(12, 3)


def test_dimension_bounds():
    assert check_dim(30) == 30
    for d in (0, 31, -1, 2.0, True):
        with pytest.raises(DimensionError):
            check_dim(d)
    # argument errors stay catchable as ValueError
    with pytest.raises(ValueError):
        n_edges(0)
