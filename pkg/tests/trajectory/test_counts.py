import numpy as np

from q2lab.cube import EdgeRef, edge_index, n_edges
from q2lab.cube.squares import path_indices
from q2lab.process import (
    PairStatus,
    ProcessState,
    add_edge,
    choose_uniform,
    run_stream,
)
from q2lab.trajectory import (
    recount_status,
    wxy_all,
    wxy_counts,
    wxy_from_status,
    y_zero_fraction_exact,
)


def _advance(d, steps, seed=0):
    state = ProcessState(d, rng=run_stream(seed))
    for _ in range(steps):
        add_edge(state, choose_uniform(state))
    return state


def test_empty_graph():
    state = ProcessState(5)
    assert wxy_counts(state, 0b00000, 0b00100) == (4, 0, 0)
    assert y_zero_fraction_exact(state) == 1.0


def test_single_path_d2():
    d = 2
    state = ProcessState(d)
    # pair 00-01, the edge 01-11 sits on its only path
    add_edge(state, edge_index(EdgeRef(0b01, 1), d))
    assert wxy_counts(state, 0b00, 0b01) == (0, 1, 0)


def test_matches_rebuild_mid_run():
    d = 6
    state = _advance(d, 60, seed=3)
    status = recount_status(state.present_edges(), d)
    assert np.array_equal(status, state.status)
    for idx in range(n_edges(d)):
        assert wxy_from_status(state.slots, idx, d) == wxy_from_status(status, idx, d)


def test_vectorized_matches_scalar():
    d = 5
    state = _advance(d, 25, seed=1)
    w, x, y = wxy_all(state.status, d)
    for idx in range(n_edges(d)):
        assert (w[idx], x[idx], y[idx]) == wxy_from_status(state.slots, idx, d)
    assert y_zero_fraction_exact(state) == float((y == 0).mean())


def test_closed_pairs_have_a_full_path():
    d = 6
    state = _advance(d, 80, seed=5)
    present = int(PairStatus.Present)
    for idx in np.flatnonzero(state.status == int(PairStatus.Closed)):
        w, x, y = wxy_from_status(state.slots, idx, d)
        assert w + x + y <= d - 1
        full = [
            all(state.slots[k] == present for k in triple)
            for triple in path_indices(int(idx), d)
        ]
        assert any(full)


def test_y_equals_closed_count():
    d = 6
    state = ProcessState(d, rng=run_stream(8))
    while state.O:
        idx = choose_uniform(state)
        y = wxy_from_status(state.slots, idx, d).Y
        assert add_edge(state, idx) == y
