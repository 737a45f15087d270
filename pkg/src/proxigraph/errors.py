"""Exception types shared across the package."""


class ProxigraphError(Exception):
    """Base class for all package errors."""


class ParseError(ProxigraphError):
    """Malformed input file or literal."""


class GeometryError(ProxigraphError):
    """Geometric precondition violated (degenerate configuration, etc.)."""


class GeneralPositionError(GeometryError):
    """Three collinear or four cocircular input points."""

    def __init__(self, kind, indices, message=None):
        self.kind = kind
        self.indices = tuple(indices)
        super().__init__(message or f"{kind} points: {self.indices}")


class PlanarityError(GeometryError):
    """Two input edges properly cross, or a vertex lies inside an edge."""


class DisconnectedError(ProxigraphError):
    """Spanning tree requested for a disconnected graph."""


class OracleGuardError(ProxigraphError):
    """Brute-force oracle invoked beyond its instance-size guard."""
