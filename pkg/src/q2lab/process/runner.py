"""
The Q_2-free process, by uniform choice among open slots or by scanning a random
permutation of the edges.
"""
import logging
import math

import numpy as np
import xxhash

from q2lab.cube import check_dim, edge_endpoints, edge_from_index, edge_index, n_edges
from q2lab.cube.squares import path_indices
from q2lab.util.decorator import lazy_property, timeit

from .error import InvalidClocksError, ProcessFinishedError
from .state import PairStatus, ProcessState, run_stream

__all__ = [
    "ProcessResult",
    "default_cadence",
    "make_clocks",
    "check_clocks",
    "scan_order",
    "choose_uniform",
    "add_edge",
    "close_after_add",
    "step_uniform",
    "run_uniform",
    "run_permutation",
]

logger = logging.getLogger("q2lab.process")

_OPEN, _PRESENT = int(PairStatus.Open), int(PairStatus.Present)


def default_cadence(d) -> int:
    """Roughly 200 snapshots over a run."""
    return max(1, math.ceil(d ** (2 / 3) * 2 ** d / 200))


class ProcessResult:
    """
    Outcome of a single run.

    Args:
        d (int): dimension
        mode (str): "uniform" or "permutation"
        final_edges (np.ndarray): sorted edge indices of the saturated graph
        step_log (list of int, optional): edge indices in order of addition
        scan_log (list of int, optional): t(i), 1-based scan position of the i-th
            addition, permutation mode only
        clocks (np.ndarray, optional): clock values, permutation mode only
        duplicate_clocks (bool, optional): tie among the clock values
    """

    def __init__(
        self,
        d,
        mode,
        final_edges,
        step_log=None,
        scan_log=None,
        clocks=None,
        duplicate_clocks=False,
    ):
        self._d = d
        self._mode = mode
        self._final_edges = np.asarray(final_edges, dtype=np.int64)
        self._step_log = step_log
        self._scan_log = None if scan_log is None else np.asarray(scan_log, np.int64)
        self._clocks = clocks
        self._duplicate_clocks = duplicate_clocks

    def __repr__(self):
        return f"<ProcessResult d={self.d}, mode={self.mode}, M={self.M}>"

    ##

    @property
    def d(self) -> int:
        return self._d

    @property
    def mode(self) -> str:
        return self._mode

    @property
    def M(self) -> int:
        return len(self._final_edges)

    @property
    def final_edges(self) -> np.ndarray:
        return self._final_edges

    @property
    def step_log(self):
        return self._step_log

    @property
    def scan_log(self):
        return self._scan_log

    @property
    def clocks(self):
        return self._clocks

    @property
    def duplicate_clocks(self) -> bool:
        return self._duplicate_clocks

    @lazy_property
    def edge_mask(self) -> np.ndarray:
        mask = np.zeros(n_edges(self.d), dtype=bool)
        mask[self._final_edges] = True
        return mask

    @lazy_property
    def degrees(self) -> np.ndarray:
        """Final degree of every vertex."""
        u, v, _ = edge_endpoints(self._final_edges, self.d)
        return np.bincount(np.concatenate([u, v]), minlength=1 << self.d)

    @lazy_property
    def digest(self) -> str:
        """xxh64 of the sorted final edge indices."""
        return xxhash.xxh64(self._final_edges.astype("<i8").tobytes()).hexdigest()

    ##

    def steps(self):
        """Added edges as EdgeRef, in order of addition."""
        if self._step_log is None:
            raise RuntimeError("steps were not recorded for this run")
        return [edge_from_index(idx, self.d) for idx in self._step_log]


def make_clocks(rng, d) -> np.ndarray:
    """Independent uniform [0, 1) clock value for every edge."""
    return rng.random(n_edges(check_dim(d)))


def check_clocks(clocks, d) -> np.ndarray:
    clocks = np.asarray(clocks, dtype=np.float64)
    n = n_edges(check_dim(d))
    if clocks.shape != (n,):
        raise InvalidClocksError(f"expecting {n} clock values, got {clocks.shape}")
    if not np.isfinite(clocks).all() or clocks.min() < 0 or clocks.max() > 1:
        raise InvalidClocksError("clock values must lie in [0, 1]")
    return clocks


def scan_order(clocks):
    """
    Edge indices in increasing clock order, ties broken by edge index.

    Returns:
        (tuple): the order, and whether any tie occurred
    """
    order = np.argsort(clocks, kind="stable")
    duplicates = bool((np.diff(clocks[order]) == 0).any())
    return order, duplicates


##


def close_after_add(state: ProcessState, e) -> int:
    """
    Close every slot that became the last missing edge of a square through `e`.

    Any new length-3 path of present edges must use `e`, so only the squares
    through `e` are inspected. In each of them, a slot closes when the other two
    slots are present and it is still open.

    Args:
        state (ProcessState): state where `e` was just marked Present
        e (EdgeRef or int): the added edge, or its index

    Returns:
        (int): number of newly closed slots
    """
    idx = e if isinstance(e, (int, np.integer)) else edge_index(e, state.d)
    status = state.slots
    closed = 0
    for a, f, b in path_indices(int(idx), state.d):
        sa, sf, sb = status[a], status[f], status[b]
        if (sa == _PRESENT) + (sf == _PRESENT) + (sb == _PRESENT) != 2:
            continue
        for k, s in ((a, sa), (f, sf), (b, sb)):
            if s == _OPEN:
                state.mark_closed(k)
                closed += 1
    return closed


def add_edge(state: ProcessState, idx) -> int:
    """Add an open slot and propagate closures, returns number of closed slots."""
    state.mark_present(idx)
    return close_after_add(state, idx)


def choose_uniform(state: ProcessState) -> int:
    if state.O == 0:
        raise ProcessFinishedError("no open slot left, the process is finished")
    return state.sampler.sample(state.uniform())


def step_uniform(state: ProcessState):
    """
    Add an open slot chosen uniformly at random.

    Returns:
        (EdgeRef): the added edge
    """
    idx = choose_uniform(state)
    add_edge(state, idx)
    return edge_from_index(idx, state.d)


def _notify(hooks, state):
    for hook in hooks:
        hook(state)


@timeit
def run_uniform(
    d, seed=0, run_index=0, hooks=(), cadence=None, record_steps=False
) -> ProcessResult:
    """
    Run the process by uniform choice until no open slot is left.

    Args:
        d (int): dimension
        seed (int or np.random.Generator, optional): master seed, or a stream
        run_index (int, optional): run index mixed into the master seed
        hooks (list of callable, optional): called with the state at i = 0, every
            `cadence` additions, and at the end
        cadence (int, optional): snapshot cadence, see `default_cadence`
        record_steps (bool, optional): keep the added edges in order
    """
    d = check_dim(d)
    rng = seed if isinstance(seed, np.random.Generator) else run_stream(seed, run_index)
    state = ProcessState(d, rng=rng)

    hooks = list(hooks)
    cadence = cadence if cadence else default_cadence(d)
    _notify(hooks, state)

    step_log = [] if record_steps else None
    while state.O:
        idx = choose_uniform(state)
        add_edge(state, idx)
        if step_log is not None:
            step_log.append(idx)
        if hooks and state.i % cadence == 0:
            _notify(hooks, state)
    if hooks and state.i % cadence:
        _notify(hooks, state)

    result = ProcessResult(d, "uniform", state.present_edges(), step_log=step_log)
    logger.debug(f"uniform run finished, d={d}, M={result.M}")
    return result


@timeit
def run_permutation(
    d, clocks, hooks=(), cadence=None, record_steps=False
) -> ProcessResult:
    """
    Scan edges in increasing clock order, adding each one that is still open.

    Skipped slots are closed and stay closed, so the next added edge is uniform
    among the open ones, same as `run_uniform`.

    Args:
        d (int): dimension
        clocks (np.ndarray): clock value of every edge
        hooks (list of callable, optional): see `run_uniform`, the state exposes
            the scan order and the scan position `j`
        cadence (int, optional): snapshot cadence
        record_steps (bool, optional): keep the added edges in order
    """
    d = check_dim(d)
    clocks = check_clocks(clocks, d)
    order, duplicates = scan_order(clocks)
    if duplicates:
        logger.warning("duplicated clock values, ties are broken by edge index")

    state = ProcessState(d, track_open=False)
    state.scan_order = order

    hooks = list(hooks)
    cadence = cadence if cadence else default_cadence(d)
    _notify(hooks, state)

    step_log = [] if record_steps else None
    scan_log = []
    for j, idx in enumerate(order.tolist(), start=1):
        if not state.is_open(idx):
            continue
        state.j = j
        add_edge(state, idx)
        scan_log.append(j)
        if step_log is not None:
            step_log.append(idx)
        if hooks and state.i % cadence == 0:
            _notify(hooks, state)
        if state.O == 0:
            # the rest of the scan only skips
            break
    state.j = state.n_edges
    if hooks and state.i % cadence:
        _notify(hooks, state)

    result = ProcessResult(
        d,
        "permutation",
        state.present_edges(),
        step_log=step_log,
        scan_log=scan_log,
        clocks=clocks,
        duplicate_clocks=duplicates,
    )
    logger.debug(f"permutation run finished, d={d}, M={result.M}")
    return result
