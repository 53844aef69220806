import logging
import math
from collections import Counter, defaultdict
from fractions import Fraction
from itertools import permutations

import numpy as np

from q2lab.cube import n_edges
from q2lab.process import run_permutation

from .catalog import SquareMasks, check_oracle_dim
from .error import OracleError

__all__ = [
    "ExactDistribution",
    "exact_M_distribution",
    "permutation_M_distribution",
    "tv_distance",
]

logger = logging.getLogger("q2lab.oracle")


class ExactDistribution:
    """
    Distribution of the final edge count with exact rational masses.

    Args:
        d (int): dimension
        masses (dict): M value to probability
    """

    def __init__(self, d, masses):
        masses = {int(m): Fraction(p) for m, p in masses.items() if p}
        if sum(masses.values()) != 1:
            raise OracleError("probability masses do not sum to 1")
        self._d = d
        self._masses = dict(sorted(masses.items()))

    def __getitem__(self, m) -> Fraction:
        return self._masses.get(m, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, ExactDistribution):
            return NotImplemented
        return self._d == other._d and self._masses == other._masses

    def __repr__(self):
        items = ", ".join(f"{m}: {p}" for m, p in self._masses.items())
        return f"<ExactDistribution d={self._d}, {{{items}}}>"

    ##

    @property
    def d(self) -> int:
        return self._d

    @property
    def masses(self):
        return dict(self._masses)

    @property
    def support(self):
        return list(self._masses)

    @property
    def mean(self) -> Fraction:
        return sum((m * p for m, p in self._masses.items()), Fraction(0))

    ##

    def as_dict(self):
        return {
            "d": self.d,
            "masses": {str(m): _ratio(p) for m, p in self._masses.items()},
            "mean": _ratio(self.mean),
        }


def _ratio(p: Fraction) -> str:
    return f"{p.numerator}/{p.denominator}"


def tv_distance(distribution: ExactDistribution, samples) -> float:
    """Total-variation distance between an exact distribution and observed M values."""
    counts = Counter(int(m) for m in samples)
    total = sum(counts.values())
    if total == 0:
        raise ValueError("no sample provided")
    support = set(counts) | set(distribution.support)
    return 0.5 * sum(
        abs(counts.get(m, 0) / total - float(distribution[m])) for m in support
    )


def exact_M_distribution(d) -> ExactDistribution:
    """
    Push probability mass forward through every reachable Q_2-free edge set.

    Sets with k edges are expanded together, a set splits its mass evenly between
    its open slots, and saturated sets collect their mass at their size.

    Raises:
        OracleRefusedError: when d > 3
    """
    d = check_oracle_dim(d)
    squares = SquareMasks(d)

    level = {0: Fraction(1)}
    masses = defaultdict(Fraction)
    n_states = 0
    for k in range(n_edges(d) + 1):
        if not level:
            break
        n_states += len(level)
        following = defaultdict(Fraction)
        for edges, mass in level.items():
            candidates = squares.open_edges(edges)
            if not candidates:
                masses[k] += mass
                continue
            share = mass / len(candidates)
            for idx in candidates:
                following[edges | 1 << idx] += share
        level = following
    logger.info(f"d={d}, {n_states} reachable edge sets")
    return ExactDistribution(d, masses)


def permutation_M_distribution(d) -> ExactDistribution:
    """
    Run the permutation formulation over every edge order.

    Raises:
        OracleRefusedError: when d > 2
    """
    d = check_oracle_dim(d, maximum=2)
    n = n_edges(d)
    ranks = np.arange(n, dtype=np.float64) / n

    counts = Counter()
    for order in permutations(range(n)):
        clocks = np.empty(n, dtype=np.float64)
        clocks[list(order)] = ranks
        counts[run_permutation(d, clocks).M] += 1
    total = math.factorial(n)
    return ExactDistribution(d, {m: Fraction(c, total) for m, c in counts.items()})
