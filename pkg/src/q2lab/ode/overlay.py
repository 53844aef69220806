import logging

import numpy as np
import pandas as pd

from .system import closed_form

__all__ = ["OVERLAY_COLUMNS", "overlay"]

logger = logging.getLogger("q2lab.ode")

OVERLAY_COLUMNS = (
    "i",
    "t",
    "O_scaled",
    "q",
    "W_scaled",
    "w",
    "X_scaled",
    "x",
    "Y_scaled",
    "y",
    "y_zero_frac",
)


def overlay(records, d) -> pd.DataFrame:
    """
    Empirical trajectory of one run next to the closed-form solution.

    W, X and Y are averaged over the sampled pairs that are still open at each
    snapshot.

    Args:
        records (list of TrajectoryRecord): snapshots of a single run
        d (int): dimension of the run
    """
    rows = []
    for r in records:
        s = closed_form(r.t)
        W, X, Y = r.wxy_mean
        rows.append(
            (
                r.i,
                r.t,
                r.O / (d * 2 ** d),
                s.q,
                W / d,
                s.w,
                X / d ** (2 / 3),
                s.x,
                Y / d ** (1 / 3),
                s.y,
                r.y_zero_fraction,
            )
        )
    table = pd.DataFrame(rows, columns=list(OVERLAY_COLUMNS))
    if len(table):
        deviation = np.abs(table["O_scaled"] - table["q"]).max()
        logger.info(f"overlay over {len(table)} snapshots, max |O - q| = {deviation:.3g}")
    return table
