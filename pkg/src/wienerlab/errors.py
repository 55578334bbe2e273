"""Domain errors shared across the library.

Every error carries a machine-readable ``name`` (the class name) that the
CLI puts into its error objects.
"""


class WienerLabError(Exception):
    """Base class for all domain errors."""

    @property
    def name(self) -> str:
        return type(self).__name__


class InvalidVertex(WienerLabError):
    pass


class InvalidEdge(WienerLabError):
    pass


class InvalidParameter(WienerLabError):
    pass


class FormatError(WienerLabError):
    pass


class Disconnected(WienerLabError):
    """Raised when an operation requires a connected graph.

    ``witness`` holds a vertex pair with no connecting path, when known.
    """

    def __init__(self, message: str = "graph is not connected", witness=None):
        super().__init__(message)
        self.witness = witness


class NotATree(WienerLabError):
    pass


class TrivialFactor(WienerLabError):
    pass


class UnsupportedOp(WienerLabError):
    pass


class InvalidRank(WienerLabError):
    pass


class RankTooLarge(WienerLabError):
    pass


class TooLarge(WienerLabError):
    pass


class InvalidWidth(WienerLabError):
    pass


class InfeasiblePair(WienerLabError):
    pass


class ProfileMismatch(WienerLabError):
    pass


class NonExactDivision(WienerLabError):
    pass
