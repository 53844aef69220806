from itertools import combinations

import numpy as np
import pytest

from q2lab.cube import (
    DimensionError,
    EdgeRef,
    all_squares,
    edge_from_index,
    edge_index,
    n_edges,
    n_squares,
    n_subcubes,
    paths3,
    square_neighbors,
    squares_through,
    subcube_edges,
    subcubes,
)


def _vertices(edges):
    return {v for e in edges for v in (e.base, e.base | 1 << e.dir)}


def test_squares_through_counts():
    assert len(squares_through(EdgeRef(0, 0), 3)) == 2
    (square,) = squares_through(EdgeRef(0, 1), 2)
    assert set(square.edges) == {edge_from_index(k, 2) for k in range(4)}
    assert squares_through(EdgeRef(0, 0), 1) == []


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_squares_through_shape(d):
    for idx in range(n_edges(d)):
        e = edge_from_index(idx, d)
        squares = squares_through(e, d)
        assert len(squares) == d - 1
        others = []
        for s in squares:
            assert e in s.edges
            assert len(set(s.edges)) == 4
            assert len(_vertices(s.edges)) == 4
            assert len({f.dir for f in s.edges}) == 2
            others.extend(f for f in s.edges if f != e)
        assert len(others) == len(set(others)) == 3 * (d - 1)


def test_neighborhood_size():
    assert len(square_neighbors(EdgeRef(0, 0), 4)) == 9
    assert len(set(square_neighbors(EdgeRef(0b0100, 1), 4))) == 9


def test_paths3_example():
    paths = paths3(0b000, 0b001, 3)
    walks = []
    for path in paths:
        walk = [0b000]
        for e in path:
            a, b = e.base, e.base | 1 << e.dir
            walk.append(b if walk[-1] == a else a)
        walks.append(walk)
    assert walks == [[0, 2, 3, 1], [0, 4, 5, 1]]
    assert len(paths3(0, 1, 2)) == 1


@pytest.mark.parametrize("d", [3, 4, 5])
def test_paths_close_squares(d):
    for idx in range(n_edges(d)):
        e = edge_from_index(idx, d)
        u, v = e.base, e.base | 1 << e.dir
        paths = paths3(u, v, d)
        assert len(paths) == d - 1
        edges = [f for path in paths for f in path]
        assert len(edges) == len(set(edges))
        from_paths = {frozenset(path + (e,)) for path in paths}
        from_squares = {frozenset(s.edges) for s in squares_through(e, d)}
        assert from_paths == from_squares


@pytest.mark.parametrize("d", [2, 3, 4, 6])
def test_all_squares(d):
    squares = all_squares(d)
    assert squares.shape == (n_squares(d), 4)
    assert n_squares(d) == d * (d - 1) // 2 * 2 ** (d - 2)
    # every edge lies in d - 1 squares
    assert np.array_equal(
        np.bincount(squares.ravel(), minlength=n_edges(d)),
        np.full(n_edges(d), d - 1),
    )
    rows = {frozenset(row.tolist()) for row in squares}
    assert len(rows) == len(squares)
    through = {
        frozenset(edge_index(f, d) for f in s.edges)
        for idx in range(n_edges(d))
        for s in squares_through(edge_from_index(idx, d), d)
    }
    assert rows == through


def test_no_square_in_q1():
    assert all_squares(1).shape == (0, 4)
    assert n_squares(1) == 0


def test_subcube_counts():
    assert len(list(subcubes(2, 3))) == 6
    assert len(list(subcubes(3, 3))) == 1
    assert len(list(subcubes(2, 4))) == 24
    for d in range(1, 6):
        for k in range(d + 1):
            assert len(list(subcubes(k, d))) == n_subcubes(k, d)
    with pytest.raises(DimensionError):
        list(subcubes(4, 3))


def test_subcube_order_and_edges():
    subs = list(subcubes(1, 2))
    assert [s.dirs for s in subs] == [(0,), (0,), (1,), (1,)]
    assert [s.base for s in subs] == [0, 2, 0, 1]

    d = 4
    for k in range(1, d + 1):
        for sub in subcubes(k, d):
            edges = subcube_edges(sub, d)
            assert len(edges) == len(set(edges)) == k * 2 ** (k - 1)
            dirs = {edge_from_index(idx, d).dir for idx in edges}
            assert dirs == set(sub.dirs)


def test_full_subcube_holds_everything():
    (sub,) = subcubes(3, 3)
    assert subcube_edges(sub, 3) == list(range(12))
    # distinct Q_2 copies of Q_3 are its 6 faces
    faces = {tuple(subcube_edges(s, 3)) for s in subcubes(2, 3)}
    assert len(faces) == 6
    assert all(len(set(a) & set(b)) <= 1 for a, b in combinations(faces, 2))
