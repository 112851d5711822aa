class IntervalOrderingError(Exception):
    """Base class for errors raised by this package."""


class InstanceFormatError(IntervalOrderingError, ValueError):
    """Malformed instance JSON or cost parameters."""


class UndefinedLengthError(IntervalOrderingError, ValueError):
    """A table cost function was asked for a length it does not list."""


class CapExceededError(IntervalOrderingError):
    """An exhaustive method was asked to run above its size cap."""


class InfeasibleEnumerationError(IntervalOrderingError):
    """The exposed parts handed to the DP cannot assemble the covered area."""


class PreconditionError(IntervalOrderingError, ValueError):
    """An operation was called on input outside its domain."""
