"""
Exception types shared by every package.

Input problems stay ValueErrors so callers that only know the standard
library still catch them.
"""


class CertificateError(Exception):
    """Base class for all errors raised by this project."""


class InvalidArgumentError(CertificateError, ValueError):
    """An argument is malformed or outside the supported range."""


class PreconditionViolation(InvalidArgumentError):
    """An operation was called outside the range where its result is valid."""


class CertificationFailure(CertificateError):
    """A certificate check did not hold.

    `partition` names the offending irreducible when one is known.
    """

    def __init__(self, message, partition=None):
        super().__init__(message)
        self.partition = partition


class OracleRefusal(CertificateError):
    """A brute-force computation was requested above its configured cap."""


class ConfigurationError(CertificateError):
    """An environment variable holds an unusable value."""


class ReportError(CertificateError):
    """A report could not be validated or written."""
