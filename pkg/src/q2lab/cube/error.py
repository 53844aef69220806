class CubeError(Exception):
    """Generic hypercube error."""


class DimensionError(CubeError, ValueError):
    """Dimension is out of the supported range, or inconsistent."""


class InvalidEdgeError(CubeError, ValueError):
    """Edge reference is malformed for this dimension."""


class NonAdjacentError(CubeError, ValueError):
    """Vertices are not adjacent in the hypercube."""
