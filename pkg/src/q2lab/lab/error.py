class LabError(Exception):
    """Generic experiment error."""


class ConfigError(LabError, ValueError):
    """Experiment configuration is invalid."""


class WorkerError(LabError):
    """
    Some runs failed, the outputs only hold the remaining ones.

    Args:
        failed (dict): error of every failed run, keyed by run index
    """

    def __init__(self, message, failed=None):
        super().__init__(message)
        self.failed = dict(failed) if failed else {}


class AcceptanceError(LabError):
    """At least one acceptance check failed."""

    def __init__(self, message, failed=()):
        super().__init__(message)
        self.failed = list(failed)
