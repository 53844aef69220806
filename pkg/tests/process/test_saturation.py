from itertools import combinations

import numpy as np
import pytest

from q2lab.process import PairStatus, as_edge_mask, contains_q2, is_saturated
from q2lab.process.saturation import closure_status


def test_edge_mask_inputs():
    mask = as_edge_mask({0, 3}, 2)
    assert mask.tolist() == [True, False, False, True]
    assert as_edge_mask([0, 3], 2).tolist() == mask.tolist()
    assert as_edge_mask(mask, 2) is mask
    assert not as_edge_mask([], 2).any()
    with pytest.raises(ValueError):
        as_edge_mask([4], 2)
    with pytest.raises(ValueError):
        as_edge_mask(np.zeros(3, dtype=bool), 2)


def test_d2():
    assert contains_q2(range(4), 2)
    for edges in combinations(range(4), 3):
        assert is_saturated(edges, 2)
        status = closure_status(edges, 2)
        assert (status == int(PairStatus.Closed)).sum() == 1
    for edges in combinations(range(4), 2):
        assert not is_saturated(edges, 2)


def test_d1():
    assert is_saturated([0], 1)
    assert not is_saturated([], 1)


def test_q2_breaks_saturation():
    assert not is_saturated(range(12), 3)
    assert contains_q2(range(12), 3)
