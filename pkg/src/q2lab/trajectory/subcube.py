import logging
from itertools import combinations

import numpy as np

from q2lab.cube import DimensionError, edge_endpoints

__all__ = ["empty_subcube_count"]

logger = logging.getLogger("q2lab.trajectory")


def empty_subcube_count(result, k) -> int:
    """
    Number of axis-aligned copies of Q_k holding no edge of the final graph.

    An edge along direction i at lower endpoint u lies in the copy spanned by
    directions S, with i in S, whose base is u with the bits of S cleared.
    """
    d = result.d
    if not 1 <= k <= d:
        raise DimensionError(f"subcube dimension {k} is outside [1, {d}]")
    u, _, dirs = edge_endpoints(result.final_edges, d)

    empty = 0
    for sub in combinations(range(d), k):
        mask = sum(1 << b for b in sub)
        inside = np.isin(dirs, sub)
        occupied = np.unique(u[inside] & ~mask).size
        empty += (1 << (d - k)) - occupied
    return int(empty)
