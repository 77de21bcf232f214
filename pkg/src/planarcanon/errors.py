"""Exception types shared across the package."""


class PlanarCanonError(Exception):
    """Base class for all package-specific errors."""


class GraphFormatError(PlanarCanonError):
    """Malformed graph text input."""


class InvalidEmbedding(PlanarCanonError):
    """Rotation system inconsistent with the carrier graph."""


class NotPlanar(PlanarCanonError):
    """The graph admits no planar embedding."""


class NotPlanarEmbedding(PlanarCanonError):
    """Rotation system is well formed but does not describe a sphere embedding."""


class NotThreeConnected(PlanarCanonError):
    """Input graph fails the 3-connectivity requirement."""


class InvalidStartEdge(PlanarCanonError):
    """Directed start edge is not an edge of the graph."""


class CoverageTimeout(PlanarCanonError):
    """No walk visited every vertex within the sequence length cap."""


class InfeasibleSize(PlanarCanonError):
    """Exhaustive search requested beyond the supported size."""


class MalformedColoredCanon(PlanarCanonError):
    """Colored code does not describe a 3-regular graph with cycle and external colors."""
