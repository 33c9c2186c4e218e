"""Exception types shared across the package."""


class NestfillError(Exception):
    """Base class for all package errors."""


class SpecError(NestfillError, ValueError):
    """Invalid parameters, malformed inputs, or violated preconditions."""


class VerificationFailure(NestfillError):
    """A structural claim failed its brute-force oracle.

    Raised by constructions that re-verify their output before returning it;
    carries the failing report so callers can surface the counterexample.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
