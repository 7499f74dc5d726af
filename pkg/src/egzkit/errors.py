"""Exception types shared across the package."""


class EgzkitError(Exception):
    """Base class for all package-specific errors."""


class PreconditionError(EgzkitError, ValueError):
    """An operation was called with input that violates its contract."""


class ResourceLimitError(EgzkitError):
    """An enumeration or table would exceed the configured candidate ceiling."""


class ContradictionError(EgzkitError):
    """A step that is mathematically guaranteed to succeed failed.

    This is never expected to fire on valid input; it signals a bug in this
    package rather than in the caller, and the message carries a full echo of
    the offending input so the case can be reported.
    """
