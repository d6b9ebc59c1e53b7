"""Exception hierarchy shared by the library and the command line."""


class EchkitError(Exception):
    """Base class for all echkit errors."""

    exit_code = 1


class UsageError(EchkitError, ValueError):
    """Malformed input: bad index, mismatched lengths, inconsistent arguments."""

    exit_code = 2


class DomainError(EchkitError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""

    exit_code = 3


class ConsistencyError(EchkitError, ArithmeticError):
    """An internal identity that must hold did not (residual, area, convexity)."""

    exit_code = 4


class ResourceError(EchkitError):
    """A guard on enumeration size or recursion depth was exceeded."""

    exit_code = 4
