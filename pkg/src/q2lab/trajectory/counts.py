"""
Classification of the length-3 paths joining an adjacent pair by the status of
their slots.

    W   three open slots
    X   two open slots and one present edge
    Y   one open slot and two present edges

Paths holding a closed slot, or three present edges, count toward none of them.
"""
import logging
from collections import namedtuple

import numpy as np

from q2lab.cube import all_squares, check_dim, edge_between, edge_index, n_edges
from q2lab.cube.squares import path_indices
from q2lab.process import PairStatus
from q2lab.process.saturation import as_edge_mask, closure_status

__all__ = [
    "WXYCounts",
    "wxy_counts",
    "wxy_from_status",
    "wxy_all",
    "y_zero_fraction_exact",
    "recount_status",
]

logger = logging.getLogger("q2lab.trajectory")

WXYCounts = namedtuple("WXYCounts", ["W", "X", "Y"])

_OPEN, _PRESENT = int(PairStatus.Open), int(PairStatus.Present)


def wxy_from_status(status, idx, d) -> WXYCounts:
    """
    Args:
        status (bytes-like or np.ndarray): slot status indexed by edge index
        idx (int): index of the pair
        d (int): dimension
    """
    w = x = y = 0
    for triple in path_indices(idx, d):
        n_open = n_present = 0
        for k in triple:
            s = status[k]
            if s == _OPEN:
                n_open += 1
            elif s == _PRESENT:
                n_present += 1
            else:
                break
        else:
            if n_open == 3:
                w += 1
            elif n_open == 2:
                x += 1
            elif n_open == 1:
                y += 1
    return WXYCounts(w, x, y)


def wxy_counts(state, u, v) -> WXYCounts:
    """
    W/X/Y counts of the Q_d-adjacent pair (u, v) in the current state.

    Args:
        state (ProcessState): the process state
        u (int): vertex
        v (int): vertex adjacent to `u`
    """
    e = edge_between(u, v, state.d)
    return wxy_from_status(state.slots, edge_index(e, state.d), state.d)


def recount_status(edges, d) -> np.ndarray:
    """Slot statuses rebuilt from the present edges alone, ignoring history."""
    return closure_status(as_edge_mask(edges, d), d)


def wxy_all(status, d, squares=None):
    """
    W/X/Y of every adjacent pair in one vectorized pass over the squares.

    Returns:
        (tuple of np.ndarray): W, X, Y indexed by edge index
    """
    d = check_dim(d)
    n = n_edges(d)
    if squares is None:
        squares = all_squares(d)
    status = np.asarray(status)
    slot = status[squares]
    is_open = (slot == _OPEN).astype(np.int64)
    is_present = (slot == _PRESENT).astype(np.int64)
    total_open = is_open.sum(axis=1, keepdims=True)
    total_present = is_present.sum(axis=1, keepdims=True)

    # composition of the other three slots, seen from each corner edge
    n_open = total_open - is_open
    n_present = total_present - is_present
    valid = (n_open + n_present) == 3

    counts = []
    for k in (3, 2, 1):
        flag = (valid & (n_open == k)).ravel()
        counts.append(np.bincount(squares.ravel(), weights=flag, minlength=n))
    return tuple(c.astype(np.int64) for c in counts)


def y_zero_fraction_exact(state) -> float:
    """Fraction of all Q_d-adjacent pairs with Y = 0."""
    _, _, y = wxy_all(state.status, state.d)
    return float((y == 0).mean())
