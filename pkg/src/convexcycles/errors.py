"""Exception types shared across the library."""


class ConvexCyclesError(Exception):
    """Base class for every error raised by this package."""


class InvalidEdge(ConvexCyclesError):
    """Loop edge, or an endpoint pair that cannot form a simple edge."""


class DuplicateEdge(ConvexCyclesError):
    """The same unordered edge was supplied more than once."""


class OutOfRange(ConvexCyclesError):
    """A vertex index lies outside 0..n-1."""


class InvalidParameter(ConvexCyclesError):
    """A generator or operation parameter violates its precondition."""


class ParseError(ConvexCyclesError):
    """Malformed graph6 or edge-list input."""


class Disconnected(ConvexCyclesError):
    """The operation requires a connected graph (or a reachable pair)."""


class NotApplicable(ConvexCyclesError):
    """The operation's girth/parity precondition is not met."""


class InvalidCycle(ConvexCyclesError):
    """The supplied vertex sequence is not a cycle of the host graph."""


class InconsistentInput(ConvexCyclesError):
    """Input data contradicts a structural fact it claims to encode."""


class ConsistencyError(ConvexCyclesError):
    """An internally verified identity failed: implementation bug, exit code 3."""
