"""
Observables of the permutation formulation: the unconstrained scanned graph H(j)
and the number of additions i(j) among the first j scanned edges.
"""
import logging

import numpy as np

from q2lab.cube import check_dim, edge_endpoints, n_edges

from .error import TrajectoryError

__all__ = [
    "isolated_pair_fraction",
    "additions_curve",
    "early_additions",
    "concavity_defect",
]

logger = logging.getLogger("q2lab.trajectory")


def isolated_pair_fraction(H_j, d) -> float:
    """
    Fraction of Q_d-adjacent pairs whose endpoints are both isolated in H(j).

    Args:
        H_j (array-like): edge indices of the first j scanned edges
        d (int): dimension
    """
    d = check_dim(d)
    H_j = np.asarray(H_j, dtype=np.int64)
    u, v, _ = edge_endpoints(H_j, d)
    degrees = np.bincount(np.concatenate([u, v]), minlength=1 << d)
    isolated = degrees == 0

    u_all, v_all, _ = edge_endpoints(np.arange(n_edges(d), dtype=np.int64), d)
    return float((isolated[u_all] & isolated[v_all]).mean())


def _scan_log(result):
    if result.scan_log is None:
        raise TrajectoryError("i(j) is only defined for permutation runs")
    return result.scan_log


def additions_curve(result, js) -> np.ndarray:
    """
    i(j), number of edges added among the first j scanned.

    Args:
        result (ProcessResult): a permutation run
        js (array-like): scan positions
    """
    return np.searchsorted(_scan_log(result), np.asarray(js), side="right")


def early_additions(result) -> int:
    """i(j) at j = floor(d^(2/3) 2^(d-1))."""
    d = result.d
    j = min(int(d ** (2 / 3) * 2 ** (d - 1)), n_edges(d))
    return int(additions_curve(result, [j])[0])


def concavity_defect(result, n_points=64) -> float:
    """
    Largest positive second difference of i(j) over an even grid, scaled by the grid
    spacing. Zero when i(j) is concave on the grid.
    """
    n = n_edges(result.d)
    js = np.linspace(0, n, n_points + 1).round().astype(np.int64)
    i_j = additions_curve(result, js).astype(np.float64)
    spacing = n / n_points
    second = np.diff(i_j, n=2) / spacing
    return float(max(0.0, second.max())) if second.size else 0.0
