"""Custom exceptions for storyplan."""


class StoryplanError(Exception):
    """Base exception for storyplan."""

    pass


class ConfigurationError(StoryplanError):
    """Exception raised for configuration errors."""

    pass


class PlanFormatError(StoryplanError):
    """Exception raised for malformed graph or plan files."""

    pass


# Graph construction and recognition


class GraphError(StoryplanError):
    """Exception raised for invalid graph input."""

    pass


class OutOfRangeError(GraphError):
    """An edge endpoint is outside 0..n-1."""

    pass


class DuplicateEdgeError(GraphError):
    """The same unordered edge was given twice."""

    pass


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""

    pass


class BadParamsError(GraphError):
    """A named graph family was requested with invalid parameters."""

    pass


class NotTwoTreeError(GraphError):
    """The graph has no stacking order."""

    pass


class NotPartialTwoTreeError(GraphError):
    """The graph has treewidth greater than two."""

    pass


# Preconditions of planners and the oracle


class PreconditionError(StoryplanError):
    """An algorithm was called on an input outside its domain."""

    pass


class NotBijectiveError(PreconditionError):
    """A vertex order is not a bijection onto 1..n."""

    pass


class NotBipartiteError(PreconditionError):
    """The graph has an odd cycle."""

    pass


class NotPlanarError(PreconditionError):
    """The graph is not planar."""

    pass


class NotOuterplanarError(PreconditionError):
    """The graph is not outerplanar."""

    pass


class HasTriangleError(PreconditionError):
    """The graph contains a triangle."""

    pass


class IsK4Error(PreconditionError):
    """A component is the complete graph on four vertices."""

    pass


class DegreeTooHighError(PreconditionError):
    """A vertex has degree greater than three."""

    pass


class TooLargeError(PreconditionError):
    """The graph exceeds the exhaustive search limit."""

    pass


class FramesNotPlanarError(PreconditionError):
    """A vertex order produces a non-planar frame."""

    pass


class NoApplicablePlannerError(PreconditionError):
    """No registered planner accepts the graph in the requested mode."""

    def __init__(self, message: str, diagnostics: dict[str, str] | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


# Geometry


class GeometryError(StoryplanError):
    """Exception raised for drawing errors."""

    pass


class MissingPositionError(GeometryError):
    """A drawn edge has an endpoint without a position."""

    pass


class NoFeasibleRegionError(GeometryError):
    """No position keeps the new frame plane."""

    pass


# Conditions guaranteed by the constructions; raised only on bugs


class InternalAssertionError(StoryplanError):
    """A condition that the construction guarantees did not hold."""

    pass


class CactusViolationError(InternalAssertionError):
    """The weak dual has a loop or an edge on two cycles."""

    pass


class ClaimViolationError(InternalAssertionError):
    """A structural claim about the faces set F failed."""

    pass


class InvariantViolationError(InternalAssertionError):
    """A visibility invariant of the planar forest planner failed."""

    pass


class NoGoodVertexError(InternalAssertionError):
    """No vertex can be picked without breaking a rule."""

    pass


class BoundViolationError(InternalAssertionError):
    """A frame exceeded the edge bound of the subcubic construction."""

    pass
