"""Exception hierarchy shared by all modules."""


class HilbcupError(ValueError):
    """Base class for every error raised by this package."""

    code = "ERROR"


class WeightMismatch(HilbcupError):
    code = "WEIGHT_MISMATCH"


class Infeasible(HilbcupError):
    code = "INFEASIBLE"


class OutOfRange(HilbcupError):
    code = "OUT_OF_RANGE"


class MixedWeight(HilbcupError):
    code = "MIXED_WEIGHT"


class BoundExceeded(HilbcupError):
    code = "BOUND_EXCEEDED"


class NonIntegerResult(HilbcupError):
    """Raised when an engine that must produce integers does not (internal bug)."""

    code = "NON_INTEGER_RESULT"


class NonIntegerCoefficient(HilbcupError):
    code = "NON_INTEGER_COEFFICIENT"


class SingularBasis(HilbcupError):
    code = "SINGULAR_BASIS"


class UnknownSuite(HilbcupError):
    code = "UNKNOWN_SUITE"
