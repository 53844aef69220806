from fractions import Fraction

import pytest

from q2lab.oracle import (
    ExactDistribution,
    OracleError,
    OracleRefusedError,
    enumerate_saturated,
    exact_M_distribution,
    permutation_M_distribution,
    tv_distance,
)
from q2lab.process import make_clocks, run_permutation, run_stream, run_uniform


def _sample(d, runs, mode):
    if mode == "uniform":
        return [run_uniform(d, seed=5, run_index=k).M for k in range(runs)]
    return [
        run_permutation(d, make_clocks(run_stream(5, k), d)).M for k in range(runs)
    ]


def test_small_dimensions():
    assert exact_M_distribution(1).masses == {1: Fraction(1)}
    assert exact_M_distribution(2).masses == {3: Fraction(1)}


def test_d3_support(exact_d3):
    assert sum(exact_d3.masses.values()) == 1
    assert exact_d3.support == enumerate_saturated(3).sizes
    assert all(p > 0 for p in exact_d3.masses.values())
    assert exact_d3[100] == 0
    assert min(exact_d3.support) <= exact_d3.mean <= max(exact_d3.support)


def test_payload(exact_d3):
    payload = exact_d3.as_dict()
    assert payload["d"] == 3
    assert set(payload["masses"]) == {str(m) for m in exact_d3.support}
    p, q = payload["masses"]["9"].split("/")
    assert Fraction(int(p), int(q)) == exact_d3[9]


def test_permutation_formulation():
    assert permutation_M_distribution(1) == exact_M_distribution(1)
    assert permutation_M_distribution(2) == exact_M_distribution(2)
    with pytest.raises(OracleRefusedError):
        permutation_M_distribution(3)
    with pytest.raises(OracleRefusedError):
        exact_M_distribution(4)


def test_masses_must_sum_to_one():
    with pytest.raises(OracleError):
        ExactDistribution(2, {3: Fraction(1, 2)})


def test_tv_distance():
    exact = exact_M_distribution(2)
    assert tv_distance(exact, [3, 3, 3]) == 0.0
    assert tv_distance(exact, [3, 4]) == pytest.approx(0.5)
    with pytest.raises(ValueError):
        tv_distance(exact, [])


@pytest.mark.parametrize("mode", ["uniform", "permutation"])
def test_sampled_runs_agree(exact_d3, mode):
    assert tv_distance(exact_d3, _sample(3, 4000, mode)) < 0.04


@pytest.mark.slow
@pytest.mark.parametrize("mode", ["uniform", "permutation"])
def test_sampled_runs_agree_closely(exact_d3, mode):
    assert tv_distance(exact_d3, _sample(3, 20000, mode)) < 0.02
