"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all package-specific errors."""


class IndexOutOfRange(Error):
    """An edge endpoint or vertex index lies outside its part."""


class DuplicateEdge(Error):
    """The same (a, b) edge was supplied more than once."""


class InvalidPermutation(Error):
    """An ordering is not a bijection on the expected index range."""


class NotConnected(Error):
    """The operation requires a connected graph."""


class BudgetExceeded(Error):
    """A bounded search ran out of budget before reaching a conclusion."""


class NotAPath(Error):
    """A vertex sequence is not a simple path in the graph."""


class NoStraightShortestPath(Error):
    """Exhaustive search proved no shortest path is straight.

    Signals a violated precondition (the supplied ordering was not a
    straight biconvex ordering); never expected on valid input.
    """


class IsolatedVertex(Error):
    """The vertex has no neighbors."""


class ObservationViolated(Error):
    """A consecutiveness consequence failed: the ordering is not biconvex."""


class ReplacementBreaksPath(Error):
    """A spine vertex replacement would disconnect the path."""


class OrderingNotStraight(Error):
    """The supplied ordering is not a verified biconvex straight ordering."""


class InternalProofViolation(Error):
    """A checked step of the construction failed.

    Indicates an implementation bug or an invalid ordering slipping past
    validation; never expected on valid input.
    """


class NotATree(Error):
    """The edge set is not a tree on its vertex set."""


class ExceedsKMax(Error):
    """No burning schedule of length <= k_max exists."""


class FallbackExhausted(Error):
    """Neither the greedy schedule nor the exact fallback met the target length."""

    def __init__(self, message: str, greedy_length: int | None = None):
        super().__init__(message)
        self.greedy_length = greedy_length


class FormatError(Error):
    """A graph file does not match the expected format exactly."""
