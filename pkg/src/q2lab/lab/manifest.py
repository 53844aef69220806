import json
import logging
import math
import os
from datetime import datetime, timezone
from fractions import Fraction

import numpy as np
import pandas as pd

import q2lab

__all__ = [
    "RunManifest",
    "aggregate",
    "to_serializable",
    "dump_json",
    "write_table",
]

logger = logging.getLogger("q2lab.lab")

FLOAT_FORMAT = "%.17g"


def to_serializable(obj):
    """
    Convert numpy scalars, arrays, fractions and NaN to plain JSON values.

    Floats keep their shortest round-trip representation, rationals become "p/q".
    """
    if isinstance(obj, dict):
        return {str(k): to_serializable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_serializable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_serializable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        obj = float(obj)
        return None if math.isnan(obj) or math.isinf(obj) else obj
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if obj is pd.NA:
        return None
    return obj


def dump_json(obj, path):
    """Write `obj` as indented JSON with a trailing newline."""
    text = json.dumps(to_serializable(obj), indent=2, allow_nan=False)
    with open(path, "w", encoding="utf-8", newline="\n") as fd:
        fd.write(text + "\n")
    logger.info(f'wrote "{path}"')


def write_table(frame: pd.DataFrame, path, fmt="csv"):
    """
    Persist a table, CSV with 17 significant digits or JSON records.

    Returns:
        (str): the path written, with the extension of the format
    """
    path = f"{os.path.splitext(path)[0]}.{fmt}"
    if fmt == "csv":
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
        logger.info(f'wrote "{path}"')
    else:
        records = [
            {k: v for k, v in zip(frame.columns, row)}
            for row in frame.itertuples(index=False, name=None)
        ]
        dump_json(records, path)
    return path


def aggregate(values):
    """Mean, standard error, minimum and maximum of a sample."""
    values = np.asarray(values, dtype=np.float64)
    n = values.size
    if n == 0:
        return {"n": 0, "mean": None, "stderr": None, "min": None, "max": None}
    stderr = float(values.std(ddof=1) / math.sqrt(n)) if n > 1 else None
    return {
        "n": int(n),
        "mean": float(values.mean()),
        "stderr": stderr,
        "min": float(values.min()),
        "max": float(values.max()),
    }


class RunManifest:
    """
    Everything needed to reproduce and audit a batch of runs.

    Args:
        config (ExperimentConfig): the experiment
        timestamps (bool, optional): record start and finish wall-clock times
    """

    def __init__(self, config, timestamps=False):
        self._config = config
        self._seeds = []
        self._results = []
        self._aggregates = {}
        self._status = "running"
        self._failed = []
        self._timestamps = {} if timestamps else None
        if timestamps:
            self._timestamps["started"] = self._now()

    @staticmethod
    def _now():
        return datetime.now(timezone.utc).isoformat()

    ##

    @property
    def config(self):
        return self._config

    @property
    def seeds(self):
        return list(self._seeds)

    @property
    def results(self):
        return list(self._results)

    @property
    def aggregates(self):
        return dict(self._aggregates)

    @property
    def status(self) -> str:
        return self._status

    @property
    def failed(self):
        return list(self._failed)

    ##

    def add_result(self, d, run_index, result):
        """Record a run, `result` is a flat dict of its outcome."""
        self._seeds.append(
            {"d": d, "run": run_index, "seed": [self._config.seed, run_index]}
        )
        self._results.append(dict(result, d=d, run=run_index))

    def add_failure(self, d, run_index, error):
        self._failed.append({"d": d, "run": run_index, "error": repr(error)})

    def set_aggregate(self, key, value):
        self._aggregates[str(key)] = value

    def finish(self, status=None):
        """Close the manifest, status is "partial" when some run failed."""
        if status is None:
            status = "partial" if self._failed else "ok"
        self._status = status
        if self._timestamps is not None:
            self._timestamps["finished"] = self._now()

    def to_dict(self):
        # completion order never leaks into the output
        order = lambda item: (item["d"], item["run"])  # noqa: E731
        manifest = {
            "version": q2lab.__version__,
            "config": self._config.to_dict(),
            "seeds": sorted(self._seeds, key=order),
            "results": sorted(self._results, key=order),
            "aggregates": self._aggregates,
            "status": self._status,
        }
        if self._failed:
            manifest["failed"] = sorted(self._failed, key=order)
        if self._timestamps is not None:
            manifest["timestamps"] = self._timestamps
        return manifest

    def write(self, path):
        dump_json(self.to_dict(), path)
