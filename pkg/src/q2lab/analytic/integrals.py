"""
Probability that a fixed edge is good,

    p(d) = int_0^1 (1 - x^3)^(d-1) dx = B(1/3, d) / 3,

evaluated exactly, by quadrature and through the Beta function.
"""
import logging
import math
from fractions import Fraction

from scipy import integrate, special

from .error import AnalyticError, QuadratureError

__all__ = [
    "SERIES_MAX_DIM",
    "check_order",
    "p_exact_series",
    "p_quadrature",
    "p_beta",
    "p_asymptotic",
    "p_lower_bound",
    "expected_good",
    "isolated_pair_probability",
]

logger = logging.getLogger("q2lab.analytic")

# rationals are exact at any size, this only bounds the running time
SERIES_MAX_DIM = 256

# quadrature subinterval budget
QUAD_LIMIT = 200


def check_order(d, minimum=1) -> int:
    """Validate the dimension used as a parameter of the formulas."""
    if isinstance(d, bool) or not isinstance(d, int) or not minimum <= d:
        raise AnalyticError(f"dimension must be an integer >= {minimum}, got {d!r}")
    if d > SERIES_MAX_DIM:
        raise AnalyticError(f"dimension {d} exceeds {SERIES_MAX_DIM}")
    return d


def p_exact_series(d) -> Fraction:
    """
    Exact value by binomial expansion,
        sum_k (-1)^k C(d-1, k) / (3k + 1).
    """
    d = check_order(d)
    return sum(
        (Fraction((-1) ** k * math.comb(d - 1, k), 3 * k + 1) for k in range(d)),
        Fraction(0),
    )


def p_quadrature(d, tol=1e-12) -> float:
    """
    Adaptive quadrature of the integral.

    Raises:
        QuadratureError: when the error estimate stays above `tol`
    """
    d = check_order(d)
    if tol <= 0:
        raise ValueError("tolerance must be positive")

    def integrand(x):
        return (1.0 - x ** 3) ** (d - 1)

    value, abserr, *info = integrate.quad(
        integrand,
        0.0,
        1.0,
        epsabs=tol,
        epsrel=0.0,
        limit=QUAD_LIMIT,
        full_output=True,
    )
    if len(info) > 1 or abserr > tol:
        message = info[1] if len(info) > 1 else f"error estimate {abserr:.3g}"
        raise QuadratureError(f"p({d}) did not converge: {message}")
    return value


def p_beta(d) -> float:
    """Closed form through the Beta function, B(1/3, d) / 3."""
    d = check_order(d)
    return float(special.beta(1 / 3, d) / 3)


def p_asymptotic(d) -> float:
    """Leading order Gamma(4/3) d^(-1/3)."""
    return float(special.gamma(4 / 3) * d ** (-1 / 3))


def p_lower_bound(d) -> float:
    """
    Bound from truncating the integral at d^(-1/3), where the integrand is at
    least (1 - 1/d)^(d-1).
    """
    d = check_order(d)
    return d ** (-1 / 3) * (1 - 1 / d) ** (d - 1)


def expected_good(d) -> float:
    """Expected number of good edges, d 2^(d-1) p(d)."""
    d = check_order(d)
    return float((d << (d - 1)) * p_exact_series(d))


def isolated_pair_probability(d, j):
    """
    Probability that both endpoints of a fixed adjacent pair are isolated among the
    first j scanned edges, together with the bound exp(-j / 2^(d-2)).

    The 2d - 1 edges touching the pair must all lie outside the first j, so the
    probability is C(N - 2d + 1, j) / C(N, j) with N = d 2^(d-1).

    Returns:
        (tuple of float): exact probability, exponential lower bound
    """
    d = check_order(d)
    n = d << (d - 1)
    if not 0 <= j <= n:
        raise ValueError(f"scan position {j} is outside [0, {n}]")
    exact = Fraction(1)
    for k in range(2 * d - 1):
        exact *= Fraction(max(n - j - k, 0), n - k)
    return float(exact), math.exp(-j / 2 ** (d - 2))
