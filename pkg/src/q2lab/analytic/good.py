"""
Good edges: under clock values T, an edge is good if it is not the latest of the
four edges of any square through it. Good edges always end up in the final graph
of the permutation formulation.
"""
import logging

import numpy as np

from q2lab.cube import check_dim, edge_endpoints, edge_indices, n_edges
from q2lab.process.runner import check_clocks

__all__ = ["good_edge_mask", "good_edges", "good_degrees", "early_good_fraction"]

logger = logging.getLogger("q2lab.analytic")


def good_edge_mask(clocks, d) -> np.ndarray:
    """Boolean mask of good edges, O(|E| d) vectorized."""
    d = check_dim(d)
    clocks = check_clocks(clocks, d)
    idx = np.arange(n_edges(d), dtype=np.int64)
    u, v, dirs = edge_endpoints(idx, d)

    good = np.ones(idx.size, dtype=bool)
    for j in range(d):
        rows = dirs != j
        bj = np.int64(1) << j
        dj = np.full(int(rows.sum()), j, dtype=np.int64)
        side_u = edge_indices(u[rows] & ~bj, dj, d)
        opposite = edge_indices(u[rows] ^ bj, dirs[rows], d)
        side_v = edge_indices(v[rows] & ~bj, dj, d)
        latest = np.maximum(
            np.maximum(clocks[side_u], clocks[opposite]), clocks[side_v]
        )
        good[rows] &= clocks[idx[rows]] < latest
    return good


def good_edges(clocks, d) -> np.ndarray:
    """Sorted indices of the good edges."""
    return np.flatnonzero(good_edge_mask(clocks, d))


def good_degrees(good, d) -> np.ndarray:
    """Number of good edges incident to every vertex."""
    u, v, _ = edge_endpoints(np.asarray(good, dtype=np.int64), d)
    return np.bincount(np.concatenate([u, v]), minlength=1 << d)


def early_good_fraction(clocks, d) -> float:
    """Fraction of the good edges whose clock is at most d^(-1/3)."""
    mask = good_edge_mask(clocks, d)
    if not mask.any():
        return 0.0
    early = np.asarray(clocks) <= d ** (-1 / 3)
    return float((mask & early).sum() / mask.sum())
