class AnalyticError(Exception):
    """Generic analytic evaluation error."""


class QuadratureError(AnalyticError):
    """Numerical integration did not reach the requested tolerance."""
