"""Exception hierarchy shared by all polyrecon modules."""


class PolyreconError(Exception):
    """Base class for every error raised by polyrecon."""


class GraphError(PolyreconError):
    """Input adjacency data is not a valid candidate polytope graph."""


class NotRegular(GraphError):
    pass


class NotConnected(GraphError):
    pass


class NotSimple(GraphError):
    pass


class InvalidParameter(PolyreconError, ValueError):
    pass


class ParseError(PolyreconError):
    pass


class DegreeTooSmall(PolyreconError):
    pass


class InvalidPermutation(PolyreconError, ValueError):
    pass


class TooLarge(PolyreconError):
    """Raised when an exhaustive enumeration would exceed its state budget."""


class FacesMissing(PolyreconError):
    pass


class NotAcyclic(PolyreconError):
    pass


class WalkError(PolyreconError):
    """A set of node sequences is not a facoidal system of walks."""


class NotAWalk(WalkError):
    pass


class CornerMissing(WalkError):
    pass


class CornerDuplicated(WalkError):
    pass


class InvalidPairing(WalkError):
    pass


class IncoherentFactor(WalkError):
    """A corner-graph 2-factor uses the same graph edge twice at some corner."""


class ReconstructionError(PolyreconError):
    pass


class CornerNotCovered(ReconstructionError):
    pass


class InconsistentPropagation(ReconstructionError):
    pass


class NotACycle(ReconstructionError):
    pass


class RankInconsistent(ReconstructionError):
    pass


class GapNotClosed(PolyreconError):
    """The solver stopped before primal and dual values met."""


class DualityViolation(PolyreconError):
    """A primal value exceeded a dual value; indicates a bug, never expected."""
