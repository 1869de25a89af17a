"""Exception hierarchy shared by every module of the package."""


class USequenceError(Exception):
    """Base class for all errors raised by :mod:`usequence`."""


class DenominatorNotInvertible(USequenceError, ZeroDivisionError):
    """A rational with negative p-adic valuation was reduced modulo p^e."""


class IntegralityViolation(USequenceError, ArithmeticError):
    """An exact division that must be integral left a remainder."""


class NegativityViolation(USequenceError, ArithmeticError):
    """A quantity that must be nonnegative came out negative."""


class FitMismatch(USequenceError, ArithmeticError):
    """A polynomial fit failed to reproduce the fitted function."""


class IndexBudgetExceeded(USequenceError, ValueError):
    """A sequence index beyond the configured budget was requested."""


class PrecisionTooLow(USequenceError, ValueError):
    """The decimal working precision cannot support the requested tolerance."""
