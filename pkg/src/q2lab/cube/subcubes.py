import logging
from collections import namedtuple
from itertools import combinations, product
from math import comb

from .edges import EdgeRef, check_dim, edge_index
from .error import DimensionError

__all__ = ["Subcube", "subcubes", "n_subcubes", "subcube_edges"]

logger = logging.getLogger("q2lab.cube")

# `base` has every bit in `dirs` cleared
Subcube = namedtuple("Subcube", ["dirs", "base"])


def n_subcubes(k, d) -> int:
    d = check_dim(d)
    return comb(d, k) << (d - k)


def subcubes(k, d):
    """
    Iterate over axis-aligned copies of Q_k.

    Direction subsets are visited in lexicographic order, for each subset the
    remaining d-k bits are assigned in increasing numeric order.

    Args:
        k (int): dimension of the subcube
        d (int): dimension of the host hypercube
    """
    d = check_dim(d)
    if not 0 <= k <= d:
        raise DimensionError(f"subcube dimension {k} is outside [0, {d}]")
    for dirs in combinations(range(d), k):
        free = [b for b in range(d) if b not in dirs]
        # most significant free bit varies slowest
        for bits in product((0, 1), repeat=d - k):
            base = 0
            for b, value in zip(reversed(free), bits):
                base |= value << b
            yield Subcube(dirs, base)


def subcube_edges(sub, d):
    """Indices of the k * 2^(k-1) edges inside a subcube, sorted."""
    d = check_dim(d)
    dirs, base = sub
    edges = []
    for i in dirs:
        others = [b for b in dirs if b != i]
        for bits in product((0, 1), repeat=len(others)):
            v = base
            for b, value in zip(others, bits):
                v |= value << b
            edges.append(edge_index(EdgeRef(v, i), d))
    return sorted(edges)
