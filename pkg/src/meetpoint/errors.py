"""Exception types raised across the library."""


class MeetpointError(Exception):
    """Base class for every error this library raises on purpose."""


# graph construction and lookup

class InvalidEdgeEndpoint(MeetpointError):
    pass


class NegativeWeight(MeetpointError):
    pass


class EmptyChannelList(MeetpointError):
    pass


class UnknownChannel(MeetpointError):
    pass


class InvalidSource(MeetpointError):
    pass


# grid map parsing

class EmptyMap(MeetpointError):
    pass


class UnknownCharacter(MeetpointError):
    pass


class NoUsers(MeetpointError):
    pass


# distance matrices and scoring

class EmptySources(MeetpointError):
    pass


class EmptyMatrix(MeetpointError):
    pass


class ShapeMismatch(MeetpointError):
    pass


class LengthMismatch(MeetpointError):
    pass


class ZeroSum(MeetpointError):
    pass


class NonFiniteEntry(MeetpointError):
    pass


class AllZeroScores(MeetpointError):
    pass


class NoMutuallyReachableVertex(MeetpointError):
    pass


class NoCandidate(MeetpointError):
    pass


# simulation

class UnreachableDestination(MeetpointError):
    pass


class MaxTicksExceeded(MeetpointError):
    """Simulation hit its tick budget before all users met.

    The partial trace is attached so callers can inspect or persist it.
    """

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = trace


class FloydTimeout(MeetpointError):
    """An all-pairs computation exceeded its wall-clock budget."""
