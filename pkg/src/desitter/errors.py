"""Exception types raised by the library."""


class DesitterError(Exception):
    """Base class for all library errors."""


class DomainError(DesitterError, ValueError):
    """An argument lies outside the domain of the requested function."""


class ConvergenceError(DesitterError, ArithmeticError):
    """A series failed to converge within its term budget."""


class CalibrationError(DesitterError, RuntimeError):
    """No consistent phase dictionary relates two conventions."""


class InconclusiveError(DesitterError, RuntimeError):
    """A check could not evaluate any of its probe points."""
