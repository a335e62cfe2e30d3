"""Exception hierarchy shared by every module."""


class LcfnError(Exception):
    """Base class for all library errors."""


class DomainError(LcfnError, ValueError):
    """Argument outside the mathematical domain of an operation (poles, cuts, regions)."""


class RangeError(DomainError):
    """Argument outside the supported numeric window (table sizes, index caps)."""


class CapabilityError(LcfnError, NotImplementedError):
    """The operation is well defined but not evaluable by this library."""


class AccuracyError(LcfnError, ArithmeticError):
    """A truncated process did not reach its tolerance.

    ``best`` carries the last estimate (usually an ``EvalResult``) so callers
    can still inspect it.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
