import logging
import re
from collections import OrderedDict

from q2lab.cube import MAX_DIM

from .error import ConfigError

__all__ = ["COMMANDS", "DEFAULT_MAX_DIM", "ExperimentConfig", "parse_dims"]

logger = logging.getLogger("q2lab.lab")

COMMANDS = ("run", "sweep", "goodedges", "ode", "oracle", "report")

# state arrays grow as d 2^(d-1)
DEFAULT_MAX_DIM = 22


def parse_dims(text):
    """
    Parse a dimension list, either "8..16", "8-16" or "8,10,12".

    Returns:
        (tuple of int): dimensions in the given order
    """
    text = str(text).strip()
    matched = re.fullmatch(r"(\d+)\s*(?:\.\.|-)\s*(\d+)", text)
    if matched:
        lo, hi = (int(v) for v in matched.groups())
        if lo > hi:
            raise ConfigError(f'empty dimension range "{text}"')
        return tuple(range(lo, hi + 1))
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise ConfigError(f'unable to parse dimension list "{text}"')


class ExperimentConfig:
    """
    Validated settings of a lab command.

    Args:
        command (str): the subcommand
        dims (int or tuple of int): dimension, or the dimensions of a sweep
        runs (int, optional): independent runs per dimension
        seed (int, optional): master seed
        cadence (int, optional): snapshot every this many additions, auto if None
        sample_pairs (int, optional): adjacent pairs observed by the snapshots
        output (str, optional): output directory
        fmt (str, optional): "csv" or "json"
        c (float, optional): degree threshold coefficient
        k_list (tuple of int, optional): subcube dimensions to count empty copies of
        workers (int, optional): parallel workers, 1 runs in-process
        mode (str, optional): "uniform" or "permutation"
        allow_large (bool, optional): lift the dimension guard up to the hard limit
        scheduler (str, optional): address of an existing dask scheduler
        timestamps (bool, optional): record wall-clock times in the manifest
    """

    def __init__(
        self,
        command,
        dims,
        runs=10,
        seed=0,
        cadence=None,
        sample_pairs=4096,
        output=None,
        fmt="csv",
        c=0.3,
        k_list=(1, 2, 3),
        workers=1,
        mode="uniform",
        allow_large=False,
        scheduler=None,
        timestamps=False,
    ):
        if command not in COMMANDS:
            raise ConfigError(f'unknown command "{command}"')
        self._command = command

        dims = (dims,) if isinstance(dims, int) else tuple(dims)
        if not dims:
            raise ConfigError("no dimension given")
        limit = MAX_DIM if allow_large else DEFAULT_MAX_DIM
        for d in dims:
            if isinstance(d, bool) or not isinstance(d, int) or d < 1:
                raise ConfigError(f"dimension must be a positive integer, got {d!r}")
            if d > limit:
                hint = "" if allow_large else ", use --allow-large to go further"
                raise ConfigError(f"dimension {d} exceeds {limit}{hint}")
        self._dims = dims

        for name, value in (("runs", runs), ("sample_pairs", sample_pairs)):
            if not isinstance(value, int) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if not isinstance(workers, int) or workers < 1:
            raise ConfigError(f"workers must be a positive integer, got {workers!r}")
        if cadence is not None and (not isinstance(cadence, int) or cadence < 1):
            raise ConfigError(f"cadence must be a positive integer, got {cadence!r}")
        if not isinstance(seed, int) or seed < 0:
            raise ConfigError(f"seed must be a non-negative integer, got {seed!r}")
        if not c > 0:
            raise ConfigError(f"degree coefficient must be positive, got {c!r}")
        k_list = tuple(k_list)
        if any(k < 1 for k in k_list):
            raise ConfigError(f"subcube dimensions must be positive, got {k_list}")
        if fmt not in ("csv", "json"):
            raise ConfigError(f'unknown output format "{fmt}"')
        if mode not in ("uniform", "permutation"):
            raise ConfigError(f'unknown process mode "{mode}"')

        self._runs = runs
        self._seed = seed
        self._cadence = cadence
        self._sample_pairs = sample_pairs
        self._output = output
        self._fmt = fmt
        self._c = float(c)
        self._k_list = k_list
        self._workers = workers
        self._mode = mode
        self._allow_large = allow_large
        self._scheduler = scheduler
        self._timestamps = timestamps

    def __repr__(self):
        return f"<ExperimentConfig {self._command}, d={self._dims}, runs={self._runs}>"

    ##

    @property
    def command(self) -> str:
        return self._command

    @property
    def dims(self):
        return self._dims

    @property
    def d(self) -> int:
        """The dimension of a single-dimension command."""
        if len(self._dims) != 1:
            raise ConfigError(f'"{self._command}" takes a single dimension')
        return self._dims[0]

    @property
    def runs(self) -> int:
        return self._runs

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def cadence(self):
        return self._cadence

    @property
    def sample_pairs(self) -> int:
        return self._sample_pairs

    @property
    def output(self):
        return self._output

    @property
    def fmt(self) -> str:
        return self._fmt

    @property
    def c(self) -> float:
        return self._c

    @property
    def k_list(self):
        return self._k_list

    @property
    def workers(self) -> int:
        return self._workers

    @property
    def mode(self) -> str:
        return self._mode

    @property
    def allow_large(self) -> bool:
        return self._allow_large

    @property
    def scheduler(self):
        return self._scheduler

    @property
    def timestamps(self) -> bool:
        return self._timestamps

    ##

    def replace(self, **kwargs) -> "ExperimentConfig":
        """Copy with some fields overridden."""
        fields = self.to_dict(execution=True)
        fields.update(kwargs)
        return ExperimentConfig(**fields)

    def to_dict(self, execution=False):
        """
        Echo of the fields, in declaration order.

        Args:
            execution (bool, optional): include the fields that only affect how the
                runs are executed, they never change any result
        """
        fields = OrderedDict(
            [
                ("command", self._command),
                ("dims", list(self._dims)),
                ("runs", self._runs),
                ("seed", self._seed),
                ("cadence", self._cadence),
                ("sample_pairs", self._sample_pairs),
                ("output", self._output),
                ("fmt", self._fmt),
                ("c", self._c),
                ("k_list", list(self._k_list)),
                ("workers", self._workers),
                ("mode", self._mode),
                ("allow_large", self._allow_large),
                ("scheduler", self._scheduler),
                ("timestamps", self._timestamps),
            ]
        )
        if not execution:
            for name in ("output", "workers", "scheduler"):
                del fields[name]
        return fields
