"""Exception hierarchy shared across the package."""


class ConfrigidError(Exception):
    """Base class for all library errors."""


class Graph6Error(ConfrigidError):
    """Malformed graph6 input: bad byte, truncated data, or bad header."""


class GraphTooLargeError(ConfrigidError):
    """Graph exceeds the size supported by an operation."""


class GeneratorError(ConfrigidError):
    """Bad Cayley generating set: empty, contains identity, or not symmetric."""


class WeightError(ConfrigidError):
    """Weight vector has wrong length or a negative entry."""


class UnknownGraphError(ConfrigidError):
    """Catalog lookup with an unrecognized name."""


class NotSymmetricError(ConfrigidError):
    """Matrix handed to the symmetric eigensolver is not symmetric."""


class DisconnectedError(ConfrigidError):
    """Operation requires a connected graph."""


class NotAutomorphismError(ConfrigidError):
    """A supplied permutation maps some edge to a non-edge."""


class NotRegularError(ConfrigidError):
    """Walk-regularity is only defined for regular graphs."""


class EigenvalueError(ConfrigidError):
    """Requested eigenvalue is zero, unknown, or a vector is outside its eigenspace."""


class GroupTooLargeError(ConfrigidError):
    """Group closure exceeds the enumeration cap."""


class HypothesisViolatedError(ConfrigidError):
    """A product-construction hypothesis fails; message names the condition."""


class NotVertexTransitiveError(ConfrigidError):
    """Certificate route requires vertex-transitivity under the supplied group."""


class NumericalRankAmbiguityError(ConfrigidError):
    """Singular values too close to the rank cutoff to decide the rank."""
