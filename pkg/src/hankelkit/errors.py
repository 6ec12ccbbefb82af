"""Exception hierarchy shared by every hankelkit module."""


class HankelKitError(Exception):
    """Base class for all errors raised by hankelkit."""


class DivisionByZero(HankelKitError, ZeroDivisionError):
    pass


class NonUnitConstantTerm(HankelKitError, ValueError):
    pass


class InsufficientOrder(HankelKitError, ValueError):
    """Raised when a caller asks for more coefficients than are known."""


class BadLowOrder(HankelKitError, ValueError):
    """Reversion needs f(0) = 0 and an invertible linear coefficient."""


class NonzeroInnerConstant(HankelKitError, ValueError):
    pass


class ConstantTermNotOne(HankelKitError, ValueError):
    pass


class Breakdown(HankelKitError, ArithmeticError):
    """A continued-fraction level has a zero pivot but a nonzero remainder."""


class NotSquare(HankelKitError, ValueError):
    pass


class InsufficientTerms(HankelKitError, ValueError):
    pass


class IndexOutOfRange(HankelKitError, IndexError):
    pass


class NotLowerTriangular(HankelKitError, ValueError):
    pass


class NotLowerTriangularUnitDiagonal(NotLowerTriangular):
    pass


class DuplicateNodes(HankelKitError, ValueError):
    pass


class KindMismatch(HankelKitError, ValueError):
    pass


class DimensionMismatch(HankelKitError, ValueError):
    pass


class UnknownExperiment(HankelKitError, KeyError):
    pass


class UnknownSequence(HankelKitError, KeyError):
    pass


class NetworkDisabled(HankelKitError, RuntimeError):
    pass


class ParseError(HankelKitError, ValueError):
    pass
