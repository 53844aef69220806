"""
Differential-equations heuristic of the process.

With scaled time t = i / (d^(2/3) 2^d), the open-pair count and the per-pair path
counts are assumed to follow

    O ~ q(t) d 2^d,  W ~ w(t) d,  X ~ x(t) d^(2/3),  Y ~ y(t) d^(1/3),

which leads to

    dq/dt = -y
    dw/dt = -3 y w / q
    dx/dt = 3 w / q - 2 x y / q
    dy/dt = 2 x / q - y^2 / q

from q(0) = 1/2, w(0) = 1, x(0) = y(0) = 0.
"""
import logging
import math
from collections import namedtuple

from .error import SingularityError

__all__ = [
    "OdeState",
    "INITIAL_STATE",
    "rhs",
    "closed_form",
    "conjecture_scale",
    "stopping_time",
]

logger = logging.getLogger("q2lab.ode")

OdeState = namedtuple("OdeState", ["t", "q", "w", "x", "y"])

INITIAL_STATE = OdeState(0.0, 0.5, 1.0, 0.0, 0.0)


def rhs(s: OdeState):
    """
    Returns:
        (tuple of float): (dq, dw, dx, dy)
    """
    t, q, w, x, y = s
    if q <= 0:
        raise SingularityError(t, q)
    return (-y, -3 * y * w / q, 3 * w / q - 2 * x * y / q, 2 * x / q - y * y / q)


def closed_form(t) -> OdeState:
    """Exact solution from the initial conditions."""
    if t < 0:
        raise ValueError("scaled time must be non-negative")
    e8 = math.exp(-8 * t ** 3)
    return OdeState(t, 0.5 * e8, e8 ** 3, 6 * t * e8 ** 2, 12 * t ** 2 * e8)


def conjecture_scale(d) -> float:
    """(log d)^(1/3) d^(2/3) 2^d, the conjectured order of the final edge count."""
    if d < 2:
        raise ValueError("conjecture scale needs d >= 2")
    return math.log(d) ** (1 / 3) * d ** (2 / 3) * 2 ** d


def stopping_time(d) -> float:
    """Scaled time (log d)^(1/3) where the open pairs run out."""
    if d < 2:
        raise ValueError("stopping time needs d >= 2")
    return math.log(d) ** (1 / 3)
