import logging
import math

import numpy as np
import pandas as pd

from .error import SingularityError
from .system import INITIAL_STATE, OdeState, closed_form, rhs

__all__ = ["OdeTrajectory", "integrate", "integration_error"]

logger = logging.getLogger("q2lab.ode")


class OdeTrajectory:
    """
    Numerical solution on a fixed grid.

    Args:
        t (np.ndarray): strictly increasing times
        values (np.ndarray): (q, w, x, y) at every time, shape (n, 4)
        step (float): nominal step size
        order (int): order of the one-step method
    """

    def __init__(self, t, values, step, order):
        self._t = np.asarray(t, dtype=np.float64)
        self._values = np.asarray(values, dtype=np.float64)
        self._step = step
        self._order = order

    def __len__(self):
        return len(self._t)

    def __getitem__(self, k) -> OdeState:
        return OdeState(float(self._t[k]), *self._values[k].tolist())

    def __iter__(self):
        for k in range(len(self)):
            yield self[k]

    ##

    @property
    def t(self) -> np.ndarray:
        return self._t

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def step(self) -> float:
        return self._step

    @property
    def order(self) -> int:
        return self._order

    ##

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(self._values, columns=["q", "w", "x", "y"])
        frame.insert(0, "t", self._t)
        return frame


def _rk4_step(s, h):
    t, *y = s
    y = np.asarray(y)
    k1 = np.asarray(rhs(s))
    k2 = np.asarray(rhs(OdeState(t + h / 2, *(y + h / 2 * k1))))
    k3 = np.asarray(rhs(OdeState(t + h / 2, *(y + h / 2 * k2))))
    k4 = np.asarray(rhs(OdeState(t + h, *(y + h * k3))))
    return OdeState(t + h, *(y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)).tolist())


def integrate(t_max=2.0, step=1e-3) -> OdeTrajectory:
    """
    Classical fixed-step 4th order Runge-Kutta from the initial conditions.

    The last step is shortened to land on `t_max` exactly.

    Raises:
        SingularityError: q dropped to zero, carries the offending t
    """
    if t_max <= 0 or step <= 0:
        raise ValueError("t_max and step must be positive")
    n = math.ceil(t_max / step - 1e-9)

    s = INITIAL_STATE
    t, values = [s.t], [s[1:]]
    for k in range(n):
        h = min(step, t_max - s.t) if k == n - 1 else step
        s = _rk4_step(s, h)
        if s.q <= 0:
            raise SingularityError(s.t, s.q)
        t.append(s.t)
        values.append(s[1:])
    logger.debug(f"integrated {n} steps up to t={s.t:.6g}")
    return OdeTrajectory(t, values, step, order=4)


def integration_error(t_max=1.5, step=1e-3) -> pd.DataFrame:
    """
    Deviation of the numerical solution from the closed form, per component.

    Returns:
        (pd.DataFrame): one row per component, with the sup-norm error and where it
            is attained
    """
    trajectory = integrate(t_max, step)
    exact = np.asarray([closed_form(t)[1:] for t in trajectory.t])
    error = np.abs(trajectory.values - exact)
    rows = []
    for k, name in enumerate(("q", "w", "x", "y")):
        at = int(error[:, k].argmax())
        rows.append(
            {
                "component": name,
                "sup_error": float(error[at, k]),
                "t_at_sup": float(trajectory.t[at]),
            }
        )
    return pd.DataFrame(rows, columns=["component", "sup_error", "t_at_sup"])
