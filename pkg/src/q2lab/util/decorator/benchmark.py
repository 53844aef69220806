import logging
from functools import wraps
from timeit import default_timer as timer

from humanfriendly import format_timespan

__all__ = ["timeit"]

logger = logging.getLogger("q2lab.util")


def timeit(func):
    """Log the execution time of the wrapped function at DEBUG level."""

    @wraps(func)
    def timed(*args, **kwargs):
        t_start = timer()
        result = func(*args, **kwargs)
        t_end = timer()
        logger.debug(f"{func.__name__} took {format_timespan(t_end - t_start)}")
        return result

    return timed
