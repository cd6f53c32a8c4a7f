"""Exception types raised across the package."""


class BSymbolError(Exception):
    """Base class for every error raised by :mod:`bsymbol`."""


class NonPrimeModulus(BSymbolError, ValueError):
    pass


class FieldTooLarge(BSymbolError, ValueError):
    pass


class DivisionByZero(BSymbolError, ZeroDivisionError):
    pass


class ZeroElement(BSymbolError, ValueError):
    pass


class NotASubfieldTower(BSymbolError, ValueError):
    pass


class NotCoprime(BSymbolError, ValueError):
    pass


class WindowOutOfRange(BSymbolError, ValueError):
    pass


class LengthMismatch(BSymbolError, ValueError):
    pass


class FieldMismatch(BSymbolError, ValueError):
    pass


class EDoesNotDivide(BSymbolError, ValueError):
    """``e`` does not divide ``Q - 1``."""


class ENotDividingQMinus1(BSymbolError, ValueError):
    """The shortened code needs ``e | q - 1``; the name follows the construction's wording."""


class DegenerateConstruction(BSymbolError, ValueError):
    """``alpha`` does not generate ``GF(Q)`` over ``GF(q)`` (``ord_n(q) != s``) or ``s < 2``."""


class EmptyCode(BSymbolError, ValueError):
    pass


class VerificationFailure(BSymbolError, AssertionError):
    """A verified claim did not hold. ``report`` carries the partial report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
