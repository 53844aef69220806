import logging
from collections import namedtuple
from itertools import combinations

import numpy as np

from .edges import EdgeRef, check_dim, edge_between, edge_index, edge_indices
from .error import InvalidEdgeError

__all__ = [
    "Square",
    "make_square",
    "squares_through",
    "paths3",
    "path_indices",
    "square_neighbors",
    "n_squares",
    "all_squares",
]

logger = logging.getLogger("q2lab.cube")

# edges are ordered as
#   (base, i), (base ^ 2^j, i), (base, j), (base ^ 2^i, j)
Square = namedtuple("Square", ["base", "dirs", "edges"])


def make_square(base, i, j) -> Square:
    """Square spanned by directions `i` and `j` at the corner `base`."""
    if i == j:
        raise InvalidEdgeError("a square needs two distinct directions")
    i, j = min(i, j), max(i, j)
    bi, bj = 1 << i, 1 << j
    base &= ~(bi | bj)
    edges = (
        EdgeRef(base, i),
        EdgeRef(base | bj, i),
        EdgeRef(base, j),
        EdgeRef(base | bi, j),
    )
    return Square(base, (i, j), edges)


def squares_through(e, d):
    """
    Every copy of Q_2 containing edge `e`, one per direction other than `e.dir`.

    Args:
        e (EdgeRef): the edge
        d (int): dimension

    Returns:
        (list of Square): ordered by the second direction
    """
    d = check_dim(d)
    edge_index(e, d)  # validate
    base, i = e
    return [make_square(base, i, j) for j in range(d) if j != i]


def paths3(u, v, d):
    """
    Length-3 paths joining two adjacent vertices.

    Each path runs u -> u^2^j -> v^2^j -> v for a direction j other than the one
    of the edge uv. Edges are listed in walking order.

    Returns:
        (list of tuple of EdgeRef): one path per direction, in increasing j
    """
    d = check_dim(d)
    i = edge_between(u, v, d).dir
    paths = []
    for j in range(d):
        if j == i:
            continue
        bj = 1 << j
        paths.append(
            (
                edge_between(u, u ^ bj, d),
                edge_between(u ^ bj, v ^ bj, d),
                edge_between(v ^ bj, v, d),
            )
        )
    return paths


def path_indices(idx, d):
    """
    Edge indices of the length-3 paths joining the endpoints of edge `idx`.

    This is the hot path of the process engine, it performs no validation.

    Returns:
        (list of tuple of int): (side at lower end, opposite edge, side at upper end)
    """
    half = d - 1
    i = idx >> half
    c = idx & ((1 << half) - 1)
    bi = 1 << i
    u = ((c >> i) << (i + 1)) | (c & (bi - 1))
    v = u | bi
    triples = []
    for j in range(d):
        if j == i:
            continue
        bj = 1 << j
        mj = bj - 1
        # both sides run along j, opposite edge runs along i
        a, b = u & ~bj, v & ~bj
        w = u ^ bj
        triples.append(
            (
                (j << half) | ((a >> (j + 1)) << j) | (a & mj),
                (i << half) | ((w >> (i + 1)) << i) | (w & (bi - 1)),
                (j << half) | ((b >> (j + 1)) << j) | (b & mj),
            )
        )
    return triples


def square_neighbors(e, d):
    """The 3(d-1) distinct edges sharing a square with `e`, as indices."""
    d = check_dim(d)
    idx = edge_index(e, d)
    return sorted(k for triple in path_indices(idx, d) for k in triple)


def n_squares(d) -> int:
    d = check_dim(d)
    if d < 2:
        return 0
    return (d * (d - 1) // 2) << (d - 2)


def all_squares(d):
    """
    Every square as a row of 4 edge indices, in the `Square` edge order.

    Returns:
        (np.ndarray): shape (n_squares, 4), int64
    """
    d = check_dim(d)
    if d < 2:
        return np.empty((0, 4), dtype=np.int64)
    vertices = np.arange(1 << d, dtype=np.int64)
    blocks = []
    for i, j in combinations(range(d), 2):
        bi, bj = 1 << i, 1 << j
        base = vertices[(vertices & (bi | bj)) == 0]
        di = np.full_like(base, i)
        dj = np.full_like(base, j)
        blocks.append(
            np.stack(
                [
                    edge_indices(base, di, d),
                    edge_indices(base | bj, di, d),
                    edge_indices(base, dj, d),
                    edge_indices(base | bi, dj, d),
                ],
                axis=1,
            )
        )
    return np.concatenate(blocks, axis=0)
