"""Exception hierarchy shared by every module."""


class NetreconError(Exception):
    """Base class for all errors raised by the package."""


# -- network structure -------------------------------------------------------

class NetworkError(NetreconError, ValueError):
    pass


class NotSimple(NetworkError):
    pass


class Disconnected(NetworkError):
    pass


class BadDegree(NetworkError):
    def __init__(self, vertex, degree):
        super().__init__(f"vertex {vertex!r} has degree {degree}")
        self.vertex = vertex
        self.degree = degree


class UnlabeledLeaf(NetworkError):
    pass


class DuplicateLabel(NetworkError):
    pass


class NotACutEdge(NetworkError):
    pass


class InvalidTarget(NetworkError):
    pass


class ParseError(NetreconError, ValueError):
    pass


# -- multisets ---------------------------------------------------------------

class MultisetError(NetreconError, ValueError):
    pass


class NegativeLength(MultisetError):
    pass


class NotPartitionable(MultisetError):
    pass


class BadSize(MultisetError):
    pass


class InconsistentChains(NetreconError, ValueError):
    pass


# -- reconstruction ----------------------------------------------------------

class NotRealizable(NetreconError):
    """The matrix has no realizing network of the requested class.

    ``stage`` names the pipeline step that gave up and ``cell`` the offending
    leaf pair (or ``None``); both end up in CLI diagnostics.
    """

    def __init__(self, message, stage=None, cell=None):
        super().__init__(message)
        self.stage = stage
        self.cell = cell

    def diagnostic(self):
        parts = [f"stage={self.stage or 'unknown'}"]
        if self.cell is not None:
            parts.append("cell=(%s,%s)" % tuple(self.cell))
        return " ".join(parts) + f" {self}"


class NotRealizableLevel1(NotRealizable):
    pass


class NotRealizableLevel2(NotRealizable):
    pass


class NoPendantChain(NotRealizableLevel1):
    pass


class NotACherry(NotRealizable):
    pass


class NoValidReattachment(NotRealizableLevel2):
    pass


class AmbiguousArrangement(NotRealizableLevel2):
    pass


# -- oracle ------------------------------------------------------------------

class BudgetExceeded(NetreconError):
    pass


class UnknownFixture(NetreconError, KeyError):
    pass
