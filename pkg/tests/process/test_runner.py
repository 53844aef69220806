import numpy as np
import pytest

from q2lab.cube import EdgeRef, edge_index, n_edges
from q2lab.process import (
    InvalidClocksError,
    PairStatus,
    ProcessFinishedError,
    ProcessState,
    add_edge,
    check_clocks,
    close_after_add,
    contains_q2,
    default_cadence,
    is_saturated,
    make_clocks,
    run_permutation,
    run_stream,
    run_uniform,
    scan_order,
    step_uniform,
)
from q2lab.process.saturation import closure_status


def test_degenerate_dimensions():
    for k in range(50):
        assert run_uniform(1, seed=0, run_index=k).M == 1
        assert run_uniform(2, seed=0, run_index=k).M == 3


def test_d2_closes_the_last_edge():
    state = ProcessState(2, rng=run_stream(0))
    for _ in range(3):
        step_uniform(state)
    assert (state.i, state.O) == (3, 0)
    assert (state.status == int(PairStatus.Closed)).sum() == 1
    with pytest.raises(ProcessFinishedError):
        step_uniform(state)


def test_close_after_add_counts():
    d = 3
    state = ProcessState(d)
    # two sides of the square spanned by directions 0 and 1 at the origin
    for e in (EdgeRef(0, 0), EdgeRef(0, 1)):
        assert add_edge(state, edge_index(e, d)) == 0
    # third side closes the fourth one
    assert add_edge(state, edge_index(EdgeRef(0b001, 1), d)) == 1
    assert state.slot(edge_index(EdgeRef(0b010, 0), d)) is PairStatus.Closed
    # adding again through an EdgeRef is a no-op on an already handled square
    assert close_after_add(state, EdgeRef(0b001, 1)) == 0


@pytest.mark.parametrize("d", [3, 5, 8])
def test_final_graph_is_saturated(d):
    for k in range(3):
        result = run_uniform(d, seed=1, run_index=k)
        assert not contains_q2(result.final_edges, d)
        assert is_saturated(result.final_edges, d)


def test_incremental_status_matches_rebuild(uniform_d8):
    d = 8
    state = ProcessState(d)
    for k, idx in enumerate(uniform_d8.step_log):
        add_edge(state, idx)
        if k % 37 == 0:
            assert np.array_equal(state.status, closure_status(state.present_edges(), d))
    assert state.O == 0
    assert np.array_equal(state.present_edges(), uniform_d8.final_edges)


def test_sandwich_bound(uniform_d8):
    d = 8
    state = ProcessState(d)
    for idx in uniform_d8.step_log:
        lo, hi = state.bounds()
        assert lo <= uniform_d8.M <= hi
        add_edge(state, idx)


def test_uniform_is_reproducible():
    a = run_uniform(6, seed=4, run_index=2, record_steps=True)
    b = run_uniform(6, seed=4, run_index=2, record_steps=True)
    assert a.step_log == b.step_log
    assert a.digest == b.digest
    c = run_uniform(6, seed=4, run_index=3)
    assert c.digest != a.digest or c.M != a.M


def test_result_views():
    result = run_uniform(4, seed=0, record_steps=True)
    assert result.M == len(result.step_log) == result.edge_mask.sum()
    assert result.degrees.sum() == 2 * result.M
    assert [edge_index(e, 4) for e in result.steps()] == result.step_log
    assert len(result.digest) == 16


def test_hooks_cadence():
    seen = []
    result = run_uniform(5, seed=2, hooks=[lambda s: seen.append(s.i)], cadence=10)
    assert seen[0] == 0
    assert seen[-1] == result.M
    assert all(i % 10 == 0 for i in seen[1:-1])
    assert default_cadence(10) == int(np.ceil(10 ** (2 / 3) * 2 ** 10 / 200))


def test_clocks_validation():
    rng = run_stream(0)
    clocks = make_clocks(rng, 3)
    assert check_clocks(clocks, 3).shape == (12,)
    with pytest.raises(InvalidClocksError):
        check_clocks(clocks[:-1], 3)
    bad = clocks.copy()
    bad[0] = 1.5
    with pytest.raises(InvalidClocksError):
        check_clocks(bad, 3)


def test_scan_order_breaks_ties_by_index():
    order, duplicates = scan_order(np.asarray([0.5, 0.2, 0.5, 0.1]))
    assert order.tolist() == [3, 1, 0, 2]
    assert duplicates
    _, duplicates = scan_order(np.asarray([0.4, 0.3]))
    assert not duplicates


def test_permutation_run():
    d = 6
    clocks = make_clocks(run_stream(9), d)
    result = run_permutation(d, clocks, record_steps=True)
    assert is_saturated(result.final_edges, d)
    assert result.mode == "permutation"
    # scan positions are 1-based, increasing, and point at the added edges
    order, _ = scan_order(clocks)
    assert np.all(np.diff(result.scan_log) > 0)
    assert [order[j - 1] for j in result.scan_log] == result.step_log


def test_permutation_all_orders_d2():
    from itertools import permutations

    for perm in permutations(range(4)):
        clocks = np.empty(4)
        clocks[list(perm)] = np.arange(4) / 4
        result = run_permutation(2, clocks)
        assert result.M == 3
        assert set(result.final_edges.tolist()) == set(perm[:3])


def test_permutation_hooks_see_scan_position():
    d = 5
    clocks = make_clocks(run_stream(1), d)
    seen = []
    run_permutation(d, clocks, hooks=[lambda s: seen.append(s.j)], cadence=5)
    assert seen[0] == 0
    assert 0 < seen[-1] <= n_edges(d)
    assert seen == sorted(seen)
