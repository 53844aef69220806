"""
Canonical edge identity in the hypercube.

An edge is referred to by its lower endpoint (the endpoint whose bit `dir` is
clear) and its direction. Edges of the same direction occupy one contiguous block
of `2^(d-1)` indices, inside the block the base is compressed by dropping bit `dir`.
"""
import logging
from collections import namedtuple

import numpy as np

from .error import DimensionError, InvalidEdgeError, NonAdjacentError

__all__ = [
    "MAX_DIM",
    "EdgeRef",
    "check_dim",
    "n_vertices",
    "n_edges",
    "edge_index",
    "edge_from_index",
    "edge_between",
    "edge_indices",
    "edge_endpoints",
    "all_edges",
]

logger = logging.getLogger("q2lab.cube")

MAX_DIM = 30

EdgeRef = namedtuple("EdgeRef", ["base", "dir"])


def check_dim(d, minimum=1):
    if isinstance(d, bool) or not isinstance(d, (int, np.integer)):
        raise DimensionError(f"dimension must be an integer, got {d!r}")
    if not minimum <= d <= MAX_DIM:
        raise DimensionError(f"dimension {d} is outside [{minimum}, {MAX_DIM}]")
    return int(d)


def n_vertices(d) -> int:
    return 1 << check_dim(d)


def n_edges(d) -> int:
    d = check_dim(d)
    return d << (d - 1)


def _check_edge(e, d):
    base, i = e
    if not 0 <= i < d:
        raise InvalidEdgeError(f"direction {i} is outside [0, {d}) for d={d}")
    if not 0 <= base < (1 << d):
        raise InvalidEdgeError(f"base vertex {base} does not fit in {d} bits")
    if base >> i & 1:
        raise InvalidEdgeError(f"base vertex {base:0{d}b} has bit {i} set")


def edge_index(e, d) -> int:
    """
    Dense index of an edge.

    Args:
        e (EdgeRef): the edge
        d (int): dimension of the hypercube

    Returns:
        (int): index in [0, d * 2^(d-1))
    """
    d = check_dim(d)
    _check_edge(e, d)
    base, i = e
    low = base & ((1 << i) - 1)
    high = base >> (i + 1)
    return (i << (d - 1)) | (high << i) | low


def edge_from_index(idx, d) -> EdgeRef:
    d = check_dim(d)
    if not 0 <= idx < (d << (d - 1)):
        raise InvalidEdgeError(f"edge index {idx} is outside the range for d={d}")
    i, c = divmod(int(idx), 1 << (d - 1))
    low = c & ((1 << i) - 1)
    high = c >> i
    return EdgeRef((high << (i + 1)) | low, i)


def edge_between(u, v, d) -> EdgeRef:
    """Edge joining two adjacent vertices."""
    d = check_dim(d)
    diff = u ^ v
    if diff == 0 or diff & (diff - 1) or diff >> d:
        raise NonAdjacentError(f"vertices {u} and {v} are not adjacent in Q_{d}")
    i = diff.bit_length() - 1
    return EdgeRef(min(u, v), i)


def edge_indices(base, dirs, d):
    """Vectorized `edge_index`, no validation is performed."""
    base = np.asarray(base, dtype=np.int64)
    dirs = np.asarray(dirs, dtype=np.int64)
    low = base & ((np.int64(1) << dirs) - 1)
    high = base >> (dirs + 1)
    return (dirs << (d - 1)) | (high << dirs) | low


def edge_endpoints(idx, d):
    """
    Vectorized endpoints of edges.

    Returns:
        (tuple of np.ndarray): lower endpoints, upper endpoints, directions
    """
    idx = np.asarray(idx, dtype=np.int64)
    dirs = idx >> (d - 1)
    c = idx & ((1 << (d - 1)) - 1)
    low = c & ((np.int64(1) << dirs) - 1)
    high = c >> dirs
    u = (high << (dirs + 1)) | low
    return u, u | (np.int64(1) << dirs), dirs


def all_edges(d):
    """Endpoints of every edge, in index order."""
    d = check_dim(d)
    return edge_endpoints(np.arange(n_edges(d), dtype=np.int64), d)
