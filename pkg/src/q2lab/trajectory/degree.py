import logging
from collections import namedtuple

import numpy as np

__all__ = ["DegreeSummary", "degree_summary", "good_degree_check"]

logger = logging.getLogger("q2lab.trajectory")

DegreeSummary = namedtuple(
    "DegreeSummary", ["histogram", "min", "max", "mean", "threshold", "fraction_above"]
)


def degree_summary(result, c=0.3) -> DegreeSummary:
    """
    Final degree statistics of a run.

    Args:
        result (ProcessResult): the run
        c (float, optional): a vertex counts as high-degree when its degree is at
            least c * d^(2/3)
    """
    degrees = result.degrees
    threshold = c * result.d ** (2 / 3)
    return DegreeSummary(
        histogram=np.bincount(degrees),
        min=int(degrees.min()),
        max=int(degrees.max()),
        mean=float(degrees.mean()),
        threshold=threshold,
        fraction_above=float((degrees >= threshold).mean()),
    )


def good_degree_check(result, good_degrees) -> bool:
    """
    Whether every final degree is at least the number of good edges at the vertex.

    Args:
        result (ProcessResult): a permutation run
        good_degrees (np.ndarray): good edges incident to every vertex, under the
            clocks of the run
    """
    violations = np.flatnonzero(result.degrees < good_degrees)
    if violations.size:
        logger.error(f"{violations.size} vertices fall below their good degree")
    return violations.size == 0
