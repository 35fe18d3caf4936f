"""Exception hierarchy shared by all modules."""


class HypercomplexError(Exception):
    """Base class for every error raised by this package."""


class NotImaginaryUnit(HypercomplexError, ValueError):
    pass


class LengthMismatch(HypercomplexError, ValueError):
    pass


class ZeroDirection(HypercomplexError, ValueError):
    pass


class NotNormalized(HypercomplexError, ValueError):
    pass


class DependentSet(HypercomplexError, ValueError):
    pass


class UnsupportedAlgebra(HypercomplexError, ValueError):
    pass


class NotAntiHermitian(HypercomplexError, ValueError):
    pass


class NotSelfAdjoint(HypercomplexError, ValueError):
    pass


class ConvergenceFailure(HypercomplexError, RuntimeError):
    pass


class IncompleteSystem(HypercomplexError, ValueError):
    pass


class GridTooSmall(HypercomplexError, ValueError):
    pass


class SingularOpticalDenominator(HypercomplexError, ValueError):
    pass


class NotEigenpair(HypercomplexError, ValueError):
    pass


class ResonanceOffGrid(HypercomplexError, ValueError):
    pass


class WrongSector(HypercomplexError, ValueError):
    pass


class ParseError(HypercomplexError, ValueError):
    pass


class TableInconsistent(HypercomplexError, RuntimeError):
    """The generated octonion multiplication table failed its self-check."""
