class ProcessError(Exception):
    """Generic process error."""


class ProcessFinishedError(ProcessError):
    """No open slot is left, the process cannot step any further."""


class InvalidClocksError(ProcessError, ValueError):
    """Clock assignment does not match the hypercube edges."""


class StatusTransitionError(ProcessError):
    """A slot left an absorbing status."""
