"""
Exhaustive scan over every edge subset of a tiny hypercube.

Edge sets are handled as integer bitmasks, bit k set when edge index k is present.
"""
import logging
from collections import Counter

from q2lab.cube import check_dim, n_edges
from q2lab.cube.squares import path_indices

from .error import OracleRefusedError

__all__ = [
    "ORACLE_MAX_DIM",
    "SquareMasks",
    "SaturatedCatalog",
    "enumerate_saturated",
    "mask_to_edges",
]

logger = logging.getLogger("q2lab.oracle")

ORACLE_MAX_DIM = 3


def check_oracle_dim(d, maximum=ORACLE_MAX_DIM) -> int:
    d = check_dim(d)
    if d > maximum:
        raise OracleRefusedError(
            f"exhaustive computation is limited to d <= {maximum}, got {d}"
        )
    return d


class SquareMasks:
    """
    For every edge, bitmasks of the other three edges of each square through it.

    An absent edge is closed in a set S when one of its masks is contained in S,
    and open otherwise.
    """

    def __init__(self, d):
        self._d = d
        self._n = n_edges(d)
        self._masks = [
            tuple(sum(1 << k for k in triple) for triple in path_indices(idx, d))
            for idx in range(self._n)
        ]

    def __getitem__(self, idx):
        return self._masks[idx]

    ##

    @property
    def d(self) -> int:
        return self._d

    @property
    def n_edges(self) -> int:
        return self._n

    @property
    def full(self) -> int:
        return (1 << self._n) - 1

    ##

    def completes_square(self, idx, edges) -> bool:
        return any(edges & m == m for m in self._masks[idx])

    def open_edges(self, edges):
        """Absent edges that can still be added without completing a square."""
        return [
            idx
            for idx in range(self._n)
            if not edges >> idx & 1 and not self.completes_square(idx, edges)
        ]

    def is_q2_free(self, edges) -> bool:
        return not any(
            edges >> idx & 1 and self.completes_square(idx, edges)
            for idx in range(self._n)
        )

    def is_saturated(self, edges) -> bool:
        return self.is_q2_free(edges) and not self.open_edges(edges)


def mask_to_edges(edges):
    """Sorted edge indices of a bitmask."""
    return tuple(k for k in range(edges.bit_length()) if edges >> k & 1)


class SaturatedCatalog:
    """
    All (Q_d, Q_2)-saturated edge sets of a hypercube.

    Args:
        d (int): dimension
        members (list of int): bitmasks of the saturated sets, in increasing order
    """

    def __init__(self, d, members):
        self._d = d
        self._members = sorted(members)

    def __len__(self):
        return len(self._members)

    def __iter__(self):
        for edges in self._members:
            yield mask_to_edges(edges)

    ##

    @property
    def d(self) -> int:
        return self._d

    @property
    def members(self):
        """Edge index tuples of every saturated set."""
        return list(self)

    @property
    def masks(self):
        return list(self._members)

    @property
    def size_histogram(self):
        """Number of saturated sets per size, sorted by size."""
        counter = Counter(bin(edges).count("1") for edges in self._members)
        return dict(sorted(counter.items()))

    @property
    def sizes(self):
        return sorted(self.size_histogram)

    ##

    def as_dict(self):
        return {
            "d": self.d,
            "n_members": len(self),
            "size_histogram": {str(k): v for k, v in self.size_histogram.items()},
            "members": [list(edges) for edges in self],
        }


def enumerate_saturated(d) -> SaturatedCatalog:
    """
    Scan every edge subset and keep the saturated ones.

    Raises:
        OracleRefusedError: when d > 3
    """
    d = check_oracle_dim(d)
    squares = SquareMasks(d)
    members = [edges for edges in range(squares.full + 1) if squares.is_saturated(edges)]
    catalog = SaturatedCatalog(d, members)
    logger.info(f"d={d}, {len(catalog)} saturated sets, sizes {catalog.size_histogram}")
    return catalog
