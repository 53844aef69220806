import logging
from collections import namedtuple

import numpy as np
import pandas as pd

from q2lab.cube import check_dim, n_edges
from q2lab.process import PairStatus

from .counts import wxy_from_status, y_zero_fraction_exact
from .error import TrajectoryError
from .scan import isolated_pair_fraction

__all__ = [
    "CSV_COLUMNS",
    "QUANTILES",
    "TrajectoryRecord",
    "sample_pairs",
    "snapshot",
    "TrajectoryRecorder",
    "records_to_frame",
    "records_from_frame",
]

logger = logging.getLogger("q2lab.trajectory")

CSV_COLUMNS = (
    "run_id",
    "d",
    "mode",
    "i",
    "t",
    "j",
    "O",
    "W_mean",
    "X_mean",
    "Y_mean",
    "y_zero_frac",
    "isolated_frac",
    "min_deg",
    "max_deg",
)

QUANTILES = (0.1, 0.5, 0.9)

TrajectoryRecord = namedtuple(
    "TrajectoryRecord",
    [
        "i",
        "t",
        "j",
        "O",
        "upper_bound",
        "n_sampled_open",
        "wxy_mean",
        "wxy_quantiles",
        "y_zero_fraction",
        "isolated_pair_fraction",
        "degree_histogram",
    ],
)


def sample_pairs(d, size, rng) -> np.ndarray:
    """Sorted uniform sample of adjacent pairs, without replacement."""
    n = n_edges(check_dim(d))
    size = min(size, n)
    return np.sort(rng.choice(n, size=size, replace=False))


def snapshot(state, sample, mode, exact_y_zero=False) -> TrajectoryRecord:
    """
    Aggregate the trajectory variables of a quiescent state.

    Args:
        state (ProcessState): the state, between two steps
        sample (np.ndarray): adjacent pairs fixed at run start
        mode (str): "uniform" or "permutation"
        exact_y_zero (bool, optional): compute the Y = 0 fraction over all adjacent
            pairs instead of the sampled open pairs
    """
    if mode not in ("uniform", "permutation"):
        raise TrajectoryError(f'unknown process mode "{mode}"')
    d = state.d
    slots = state.slots
    open_ = int(PairStatus.Open)

    counts = [wxy_from_status(slots, idx, d) for idx in sample if slots[idx] == open_]
    if counts:
        wxy = np.asarray(counts, dtype=np.float64)
        wxy_mean = tuple(wxy.mean(axis=0).tolist())
        wxy_quantiles = tuple(
            tuple(row) for row in np.quantile(wxy, QUANTILES, axis=0).T.tolist()
        )
        y_zero = float((wxy[:, 2] == 0).mean())
    else:
        wxy_mean = (np.nan,) * 3
        wxy_quantiles = ((np.nan,) * len(QUANTILES),) * 3
        y_zero = np.nan
    if exact_y_zero:
        y_zero = y_zero_fraction_exact(state)

    if mode == "permutation":
        j = state.j
        isolated = isolated_pair_fraction(state.scan_order[:j], d)
    else:
        j, isolated = None, np.nan

    i, upper = state.bounds()
    return TrajectoryRecord(
        i=i,
        t=state.t,
        j=j,
        O=state.O,
        upper_bound=upper,
        n_sampled_open=len(counts),
        wxy_mean=wxy_mean,
        wxy_quantiles=wxy_quantiles,
        y_zero_fraction=y_zero,
        isolated_pair_fraction=isolated,
        degree_histogram=np.bincount(state.degrees()),
    )


class TrajectoryRecorder:
    """
    Process hook collecting a snapshot every time it is called.

    Args:
        d (int): dimension
        mode (str): "uniform" or "permutation"
        sample_size (int): number of adjacent pairs to observe
        rng (np.random.Generator): stream used to pick the observed pairs
        exact_y_zero (bool, optional): see `snapshot`
    """

    def __init__(self, d, mode, sample_size, rng, exact_y_zero=False):
        self._d = check_dim(d)
        self._mode = mode
        self._sample = sample_pairs(d, sample_size, rng)
        self._exact_y_zero = exact_y_zero
        self._records = []

    def __call__(self, state):
        record = snapshot(state, self._sample, self._mode, self._exact_y_zero)
        logger.debug(
            f"i={record.i}, t={record.t:.4f}, O={record.O}, "
            f"WXY={tuple(round(v, 3) for v in record.wxy_mean)}"
        )
        self._records.append(record)

    ##

    @property
    def d(self) -> int:
        return self._d

    @property
    def mode(self) -> str:
        return self._mode

    @property
    def sample(self) -> np.ndarray:
        return self._sample

    @property
    def records(self):
        return list(self._records)


def records_to_frame(records, run_id, d, mode) -> pd.DataFrame:
    """Rows of the trajectory CSV, in the fixed column order."""
    rows = []
    for r in records:
        nonzero = np.flatnonzero(r.degree_histogram)
        rows.append(
            (
                run_id,
                d,
                mode,
                r.i,
                r.t,
                r.j,
                r.O,
                *r.wxy_mean,
                r.y_zero_fraction,
                r.isolated_pair_fraction,
                int(nonzero[0]),
                int(nonzero[-1]),
            )
        )
    frame = pd.DataFrame(rows, columns=list(CSV_COLUMNS))
    frame["j"] = frame["j"].astype("Int64")
    return frame


def records_from_frame(frame: pd.DataFrame):
    """
    Rebuild the snapshots of a single run from trajectory CSV rows.

    Quantiles, the sampled open count and degree histograms are not part of the CSV
    and are left empty.
    """
    records = []
    for row in frame.itertuples(index=False):
        j = None if pd.isna(row.j) else int(row.j)
        records.append(
            TrajectoryRecord(
                i=int(row.i),
                t=float(row.t),
                j=j,
                O=int(row.O),
                upper_bound=int(row.i) + int(row.O),
                n_sampled_open=None,
                wxy_mean=(float(row.W_mean), float(row.X_mean), float(row.Y_mean)),
                wxy_quantiles=None,
                y_zero_fraction=float(row.y_zero_frac),
                isolated_pair_fraction=float(row.isolated_frac),
                degree_histogram=None,
            )
        )
    return records
