"""Exception hierarchy shared by every module.

All errors derive from :class:`ZipfAuditError` (and from ``ValueError`` where
the failure is about an input value) so callers can catch broadly or narrowly.
"""


class ZipfAuditError(Exception):
    """Base class for all library errors."""


class ParseError(ZipfAuditError, ValueError):
    """A text cell could not be parsed as a count."""


class ValidationError(ZipfAuditError, ValueError):
    """Input parsed but violates a data invariant."""


class EmptyInputError(ZipfAuditError, ValueError):
    pass


class InsufficientDataError(ZipfAuditError, ValueError):
    pass


class DomainError(ZipfAuditError, ValueError):
    """A value lies outside the mathematical domain of an operation."""


class RangeError(ZipfAuditError, IndexError):
    pass


class ParameterError(ZipfAuditError, ValueError):
    pass


class ConnectivityError(ZipfAuditError):
    pass


class DivisionError(ZipfAuditError, ZeroDivisionError):
    pass
