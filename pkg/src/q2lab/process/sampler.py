import logging

import numpy as np

__all__ = ["OpenSampler"]

logger = logging.getLogger("q2lab.process")


class OpenSampler:
    """
    Set of integers in [0, n) that supports uniform sampling and removal in O(1).

    Members are packed at the front of a dense array, a reverse map tracks where each
    member sits. Removal swaps the victim with the last member.

    Args:
        n (int): size of the universe, every element starts as a member
    """

    def __init__(self, n):
        self._items = np.arange(n, dtype=np.int64)
        self._pos = np.arange(n, dtype=np.int64)
        self._size = n

    def __len__(self):
        return self._size

    def __contains__(self, item):
        pos = self._pos[item]
        return 0 <= pos < self._size

    def __iter__(self):
        return iter(self._items[: self._size].tolist())

    ##

    def remove(self, item):
        pos = int(self._pos[item])
        if not 0 <= pos < self._size:
            raise KeyError(item)
        last = int(self._items[self._size - 1])
        self._items[pos] = last
        self._pos[last] = pos
        self._items[self._size - 1] = item
        self._pos[item] = -1
        self._size -= 1

    def sample(self, u):
        """
        Pick a member from a uniform variate.

        Args:
            u (float): uniform variate in [0, 1)
        """
        if self._size == 0:
            raise IndexError("sample from an empty set")
        return int(self._items[min(int(u * self._size), self._size - 1)])

    def members(self):
        """Current members, sorted."""
        return np.sort(self._items[: self._size])
