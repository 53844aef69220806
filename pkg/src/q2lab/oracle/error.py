class OracleError(Exception):
    """Generic oracle error."""


class OracleRefusedError(OracleError, ValueError):
    """Exhaustive computation is infeasible at the requested dimension."""
