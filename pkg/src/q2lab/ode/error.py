class OdeError(Exception):
    """Generic ODE heuristic error."""


class SingularityError(OdeError, ArithmeticError):
    """The open-pair density q reached zero."""

    def __init__(self, t, q):
        super().__init__(f"singular right-hand side at t={t:.6g} (q={q:.6g})")
        self.t = t
        self.q = q
