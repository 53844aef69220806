"""
Joint goodness of two edges sharing a vertex.

With x and y the clocks of the two edges,

    f(x, y, d) = (1 - x^3)^(d-1) (1 - y^3)^(d-1)
    g(x, y, d) = (1 - x^3 - y^3 + x^2 y^2 min(x, y))^(d-2) (1 - max(x, y)^2)

integrate over the unit square to p^2 and r = P(both good) respectively.
"""
import logging
import warnings

import numpy as np
import pandas as pd
from scipy import integrate

from .error import QuadratureError
from .integrals import check_order, p_exact_series

__all__ = [
    "f_integrand",
    "g_integrand",
    "joint_r",
    "degree_variance",
    "covariance_decay_table",
]

logger = logging.getLogger("q2lab.analytic")


def f_integrand(x, y, d):
    return (1 - x ** 3) ** (d - 1) * (1 - y ** 3) ** (d - 1)


def g_integrand(x, y, d):
    lo, hi = np.minimum(x, y), np.maximum(x, y)
    return (1 - x ** 3 - y ** 3 + x ** 2 * y ** 2 * lo) ** (d - 2) * (1 - hi ** 2)


def joint_r(d, tol=1e-10) -> float:
    """
    r = P(two fixed edges at a vertex are both good), by 2-D quadrature.

    g is symmetric and only piecewise smooth across the diagonal, the integral is
    taken over the lower triangle y < x, where min and max resolve to y and x, and
    doubled.

    Raises:
        QuadratureError: when the error estimate stays above `tol`
    """
    d = check_order(d, minimum=2)
    if tol <= 0:
        raise ValueError("tolerance must be positive")

    def lower(y, x):
        return (1 - x ** 3 - y ** 3 + x ** 2 * y ** 3) ** (d - 2) * (1 - x ** 2)

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", integrate.IntegrationWarning)
        value, abserr = integrate.dblquad(
            lower, 0.0, 1.0, 0.0, lambda x: x, epsabs=tol / 4, epsrel=0.0
        )
    failed = [w for w in caught if issubclass(w.category, integrate.IntegrationWarning)]
    if failed or 2 * abserr > tol:
        reason = str(failed[0].message) if failed else f"error estimate {abserr:.3g}"
        raise QuadratureError(f"r({d}) did not converge: {reason}")
    return 2 * value


def degree_variance(d, tol=1e-10) -> float:
    """Variance of the number of good edges at a vertex, d p(1-p) + d(d-1)(r - p^2)."""
    d = check_order(d, minimum=2)
    p = float(p_exact_series(d))
    r = joint_r(d, tol)
    return d * p * (1 - p) + d * (d - 1) * (r - p ** 2)


def covariance_decay_table(d_list, tol=1e-10) -> pd.DataFrame:
    """
    Rows (d, p, r, d^(2/3) (r - p^2)), plus the good-degree variance.

    The two events are negatively correlated, r < p^2, so the decay is one of
    magnitude: whether |d^(2/3) (r - p^2)| strictly decreases along the rows is
    stored in `table.attrs["decreasing"]`.
    """
    rows = []
    for d in d_list:
        d = check_order(d, minimum=2)
        p = float(p_exact_series(d))
        r = joint_r(d, tol)
        cov = r - p ** 2
        rows.append(
            {
                "d": d,
                "p": p,
                "r": r,
                "scaled_cov": d ** (2 / 3) * cov,
                "degree_var": d * p * (1 - p) + d * (d - 1) * cov,
            }
        )
        logger.info(f"d={d}, p={p:.6g}, r={r:.6g}, r-p^2={cov:.3g}")
    table = pd.DataFrame(rows, columns=["d", "p", "r", "scaled_cov", "degree_var"])
    magnitude = np.abs(table["scaled_cov"].values)
    table.attrs["decreasing"] = bool((np.diff(magnitude) < 0).all())
    return table
