import math

import pytest

from q2lab.ode import (
    OVERLAY_COLUMNS,
    SingularityError,
    closed_form,
    integrate,
    integration_error,
    overlay,
)
from q2lab.process import run_stream, run_uniform
from q2lab.trajectory import TrajectoryRecorder


def test_trajectory_container():
    trajectory = integrate(t_max=0.5, step=0.03)
    assert trajectory.t[0] == 0.0
    assert trajectory.t[-1] == pytest.approx(0.5, abs=1e-12)
    assert len(trajectory) == math.ceil(0.5 / 0.03) + 1
    assert trajectory.order == 4 and trajectory.step == 0.03
    frame = trajectory.to_frame()
    assert list(frame.columns) == ["t", "q", "w", "x", "y"]
    assert trajectory[-1].q == pytest.approx(frame["q"].iloc[-1])


def test_matches_closed_form():
    last = integrate(t_max=0.5, step=1e-3)[-1]
    exact = closed_form(0.5)
    assert last.q == pytest.approx(0.5 * math.exp(-1), abs=1e-8)
    assert last.w == pytest.approx(math.exp(-3), abs=1e-8)
    assert last.x == pytest.approx(exact.x, abs=1e-8)
    assert last.y == pytest.approx(exact.y, abs=1e-8)


def test_fourth_order_convergence():
    coarse = integration_error(t_max=1.0, step=0.01)["sup_error"].max()
    fine = integration_error(t_max=1.0, step=0.005)["sup_error"].max()
    assert 8 < coarse / fine < 32


def test_error_table():
    table = integration_error()
    assert table["component"].tolist() == ["q", "w", "x", "y"]
    assert (table["sup_error"] < 1e-6).all()


def test_bad_arguments():
    with pytest.raises(ValueError):
        integrate(t_max=0)
    with pytest.raises(ValueError):
        integrate(step=-1e-3)


def test_overlay_anchor():
    d = 9
    recorder = TrajectoryRecorder(d, "uniform", 512, run_stream(4, stream=1))
    run_uniform(d, seed=4, hooks=[recorder], cadence=50)
    table = overlay(recorder.records, d)
    assert tuple(table.columns) == OVERLAY_COLUMNS
    first = table.iloc[0]
    assert first["t"] == 0.0
    assert first["O_scaled"] == pytest.approx(first["q"])
    assert first["W_scaled"] == pytest.approx((d - 1) / d)
    assert first["Y_scaled"] == 0.0
    assert (table["O_scaled"].diff().dropna() < 0).all()


def test_coarse_step_overshoots():
    # q is driven below zero before t = 1 at this step
    with pytest.raises(SingularityError) as excinfo:
        integrate(t_max=1.0, step=0.05)
    assert excinfo.value.q <= 0
