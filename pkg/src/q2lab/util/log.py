import logging

import coloredlogs

__all__ = ["LOG_FORMAT", "verbosity_level", "install_logger", "change_logging_level"]

LOG_FORMAT = dict(fmt="%(asctime)s %(levelname)s %(message)s", datefmt="%H:%M:%S")


def verbosity_level(verbose: int) -> str:
    """Convert a repeated -v count into a level name."""
    verbose = 2 if verbose > 2 else verbose
    return {0: "WARNING", 1: "INFO", 2: "DEBUG"}.get(verbose)


def install_logger(level="WARNING"):
    # dask chatters at INFO, keep it out unless we are debugging
    if level != "DEBUG":
        logging.getLogger("distributed").setLevel(logging.WARNING)
    coloredlogs.install(level=level, **LOG_FORMAT)


class change_logging_level:
    """Temporarily change the logging level of a command block."""

    def __init__(self, level, logger=None):
        self._target_level = level
        if isinstance(logger, str):
            logger = logging.getLogger(logger)
        self._logger = logger if logger else logging.getLogger()

    def __enter__(self):
        self._original_level = self.logger.level
        self.logger.setLevel(self._target_level)
        return self

    def __exit__(self, *exc):
        self.logger.setLevel(self._original_level)

    ##

    @property
    def logger(self):
        return self._logger
