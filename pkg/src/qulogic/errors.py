"""Exception hierarchy shared by the library and the command line."""


class QulogicError(Exception):
    """Base class for all errors raised by qulogic."""


class DomainError(QulogicError, ValueError):
    """An argument lies outside the domain of an operation (bad index, grid mismatch, ...)."""


class DegenerateSetError(DomainError):
    """A zero-mass fuzzy set or zero vector cannot be standardized or normalized."""


class ParseError(QulogicError):
    """Malformed input file."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class ConsistencyError(QulogicError):
    """Two independent computations of the same quantity disagree."""
