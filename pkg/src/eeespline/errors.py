"""Exception hierarchy.  Each class carries the CLI exit code it maps to."""


class SplineError(Exception):
    exit_code = 1


class ParseError(SplineError):
    exit_code = 3


class PartitionError(SplineError):
    exit_code = 4


class CrossingSegments(PartitionError):
    pass


class NotSimplyConnected(PartitionError):
    pass


class OpenBoundary(PartitionError):
    pass


class NonConvexDomain(SplineError):
    exit_code = 5


class NotCrossCut(SplineError):
    exit_code = 6


class NotQuasiCrossCut(SplineError):
    exit_code = 6


class DegreeSmoothnessOrder(SplineError):
    exit_code = 2


class NotASolution(SplineError):
    exit_code = 9


class NotABasis(SplineError):
    exit_code = 9


class NotARefinement(SplineError):
    exit_code = 6


class OutOfDomain(SplineError):
    exit_code = 7


class Outside(SplineError):
    exit_code = 7


class IndexOutOfRange(SplineError):
    exit_code = 8


class VerificationFailed(SplineError):
    exit_code = 10
