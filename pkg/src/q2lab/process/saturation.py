"""
Exhaustive checks over every square of the hypercube.
"""
import logging

import numpy as np

from q2lab.cube import all_squares, check_dim, n_edges

from .state import PairStatus

__all__ = ["as_edge_mask", "square_counts", "closure_status", "contains_q2", "is_saturated"]

logger = logging.getLogger("q2lab.process")


def as_edge_mask(edges, d) -> np.ndarray:
    """
    Normalize an edge set to a boolean mask over edge indices.

    Args:
        edges (array-like): either a boolean mask of length d * 2^(d-1), or a
            collection of edge indices
        d (int): dimension
    """
    d = check_dim(d)
    n = n_edges(d)
    edges = np.asarray(list(edges) if isinstance(edges, (set, frozenset)) else edges)
    if edges.dtype == bool:
        if edges.shape != (n,):
            raise ValueError(f"edge mask has shape {edges.shape}, expecting ({n},)")
        return edges
    mask = np.zeros(n, dtype=bool)
    if edges.size:
        edges = edges.astype(np.int64)
        if edges.min() < 0 or edges.max() >= n:
            raise ValueError(f"edge index out of range for d={d}")
        mask[edges] = True
    return mask


def square_counts(mask, d, squares=None):
    """Number of present edges in every square."""
    if squares is None:
        squares = all_squares(d)
    return mask[squares].sum(axis=1), squares


def closure_status(edges, d, squares=None) -> np.ndarray:
    """
    Rebuild slot statuses of an edge set from scratch.

    A slot is Present if it is in the set, Closed if it is absent but some square
    through it has its other three edges present, and Open otherwise.

    Returns:
        (np.ndarray): uint8 status array indexed by edge index
    """
    mask = as_edge_mask(edges, d)
    counts, squares = square_counts(mask, d, squares)

    status = np.full(mask.shape, int(PairStatus.Open), dtype=np.uint8)
    status[mask] = int(PairStatus.Present)

    rows = squares[counts == 3]
    missing = rows[~mask[rows]]
    status[missing] = int(PairStatus.Closed)
    return status


def contains_q2(edges, d) -> bool:
    """Whether some square has all 4 edges in the set."""
    d = check_dim(d)
    counts, _ = square_counts(as_edge_mask(edges, d), d)
    return bool((counts == 4).any())


def is_saturated(edges, d) -> bool:
    """
    Whether an edge set is (Q_d, Q_2)-saturated.

    The set must be Q_2-free and every absent hypercube edge must complete a square
    when added.
    """
    d = check_dim(d)
    mask = as_edge_mask(edges, d)
    counts, squares = square_counts(mask, d)
    if (counts == 4).any():
        return False
    status = closure_status(mask, d, squares)
    return not (status == int(PairStatus.Open)).any()
