import logging
from enum import IntEnum

import numpy as np

from q2lab.cube import check_dim, edge_endpoints, n_edges

from .error import StatusTransitionError
from .sampler import OpenSampler

__all__ = ["PairStatus", "ProcessState", "run_stream"]

logger = logging.getLogger("q2lab.process")

# uniform variates are drawn in blocks
_BUFFER_SIZE = 4096


class PairStatus(IntEnum):
    Open = 0
    Present = 1
    Closed = 2


_OPEN, _PRESENT, _CLOSED = (int(status) for status in PairStatus)


def run_stream(seed, run_index=0, stream=0) -> np.random.Generator:
    """
    Random stream of a single run, derived from (master seed, run index).

    Args:
        seed (int): master seed
        run_index (int, optional): index of the run
        stream (int, optional): 0 drives the process, 1 picks the observed pairs
    """
    entropy = [int(seed), int(run_index), int(stream)]
    return np.random.default_rng(np.random.SeedSequence(entropy))


class ProcessState:
    """
    Evolving status of every hypercube edge slot.

    Args:
        d (int): dimension
        rng (np.random.Generator, optional): random stream, required by uniform steps
        track_open (bool, optional): maintain the open-slot sampler
    """

    def __init__(self, d, rng=None, track_open=True):
        self._d = check_dim(d)
        self._n = n_edges(self._d)

        self._status = bytearray(self._n)  # all Open
        self._sampler = OpenSampler(self._n) if track_open else None

        self._i, self._open = 0, self._n

        self._rng = rng
        self._buffer, self._cursor = [], 0

        # permutation mode only
        self.scan_order = None
        self.j = 0

    ##

    @property
    def d(self) -> int:
        return self._d

    @property
    def n_edges(self) -> int:
        return self._n

    @property
    def i(self) -> int:
        """Number of Present slots."""
        return self._i

    @property
    def O(self) -> int:  # noqa: E743
        """Number of Open slots."""
        return self._open

    @property
    def sampler(self) -> OpenSampler:
        if self._sampler is None:
            raise RuntimeError("open-slot sampler is not tracked")
        return self._sampler

    @property
    def rng(self) -> np.random.Generator:
        if self._rng is None:
            raise RuntimeError("state has no random stream")
        return self._rng

    @property
    def status(self) -> np.ndarray:
        """Status array indexed by edge index, a view sharing memory with the state."""
        return np.frombuffer(self._status, dtype=np.uint8)

    @property
    def slots(self) -> bytearray:
        """Raw status buffer, fastest for scalar reads."""
        return self._status

    @property
    def t(self) -> float:
        """Scaled time i / (d^(2/3) 2^d)."""
        return self._i / (self._d ** (2 / 3) * 2 ** self._d)

    ##

    def slot(self, idx) -> PairStatus:
        return PairStatus(self._status[idx])

    def is_open(self, idx) -> bool:
        return self._status[idx] == _OPEN

    def uniform(self) -> float:
        if self._cursor >= len(self._buffer):
            self._buffer = self.rng.random(_BUFFER_SIZE).tolist()
            self._cursor = 0
        u = self._buffer[self._cursor]
        self._cursor += 1
        return u

    def mark_present(self, idx):
        if __debug__ and self._status[idx] != _OPEN:
            raise StatusTransitionError(
                f"slot {idx} is {self.slot(idx).name}, cannot become Present"
            )
        self._status[idx] = _PRESENT
        if self._sampler is not None:
            self._sampler.remove(idx)
        self._i += 1
        self._open -= 1

    def mark_closed(self, idx):
        if __debug__ and self._status[idx] != _OPEN:
            raise StatusTransitionError(
                f"slot {idx} is {self.slot(idx).name}, cannot become Closed"
            )
        self._status[idx] = _CLOSED
        if self._sampler is not None:
            self._sampler.remove(idx)
        self._open -= 1

    def present_edges(self) -> np.ndarray:
        return np.flatnonzero(self.status == _PRESENT)

    def open_edges(self) -> np.ndarray:
        return np.flatnonzero(self.status == _OPEN)

    def degrees(self) -> np.ndarray:
        """Degree of every vertex in the current graph."""
        u, v, _ = edge_endpoints(self.present_edges(), self._d)
        return np.bincount(np.concatenate([u, v]), minlength=1 << self._d)

    def bounds(self):
        """
        Bracket on the final edge count reachable from this state.

        Returns:
            (tuple of int): (i, i + O)
        """
        return self._i, self._i + self._open
