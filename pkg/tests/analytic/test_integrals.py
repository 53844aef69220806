import math
from fractions import Fraction

import numpy as np
import pytest
from scipy import special

from q2lab.analytic import (
    AnalyticError,
    expected_good,
    good_edge_mask,
    isolated_pair_probability,
    p_asymptotic,
    p_beta,
    p_exact_series,
    p_lower_bound,
    p_quadrature,
)
from q2lab.process import make_clocks, run_stream


def test_exact_values():
    assert p_exact_series(1) == 1
    assert p_exact_series(2) == Fraction(3, 4)
    assert p_exact_series(3) == Fraction(9, 14)
    assert isinstance(p_exact_series(40), Fraction)


def test_expected_good():
    assert expected_good(1) == 1
    assert expected_good(2) == 3
    assert expected_good(10) >= math.exp(-1) * 10 ** (2 / 3) * 2 ** 9 * 0.9


@pytest.mark.parametrize("d", range(2, 31))
def test_quadrature_matches_series(d):
    assert abs(p_quadrature(d) - float(p_exact_series(d))) < 1e-10


def test_beta_and_asymptotics():
    for d in (2, 7, 30, 120):
        assert p_beta(d) == pytest.approx(float(p_exact_series(d)), rel=1e-12)
        assert p_lower_bound(d) <= p_beta(d)
    assert p_beta(256) * 256 ** (1 / 3) == pytest.approx(special.gamma(1 / 3) / 3, rel=1e-2)
    assert p_asymptotic(8) == pytest.approx(special.gamma(4 / 3) / 2)


def test_argument_errors():
    for d in (0, 1.5, 257):
        with pytest.raises(AnalyticError):
            p_exact_series(d)
    with pytest.raises(ValueError):
        p_quadrature(4, tol=0)
    with pytest.raises(ValueError):
        isolated_pair_probability(3, 13)


def test_isolated_pair_probability():
    assert isolated_pair_probability(4, 0) == (1.0, 1.0)
    d = 10
    exact, bound = isolated_pair_probability(d, 2 ** (d - 2))
    assert exact >= bound == pytest.approx(math.exp(-1))
    exact, _ = isolated_pair_probability(3, 12)
    assert exact == 0.0


def test_mean_good_count():
    d, runs = 8, 400
    counts = np.asarray(
        [good_edge_mask(make_clocks(run_stream(0, k), d), d).sum() for k in range(runs)],
        dtype=np.float64,
    )
    stderr = counts.std(ddof=1) / math.sqrt(runs)
    assert abs(counts.mean() - expected_good(d)) < 4 * stderr
