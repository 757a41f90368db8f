"""
Exception hierarchy shared by the algebra library, its commands and views.
"""


class BettiLabError(Exception):
    """Base class for every error raised by the algebra app."""

    exit_code = 1
    http_status = 500


class InvalidParameters(BettiLabError):
    exit_code = 2
    http_status = 400


class PreconditionViolation(InvalidParameters):
    """A structural precondition of a combinatorial operation does not hold."""


class ResourceLimitExceeded(BettiLabError):
    exit_code = 3
    http_status = 413

    def __init__(self, what: str, size: int, budget: int):
        self.what = what
        self.size = size
        self.budget = budget
        super().__init__(f"{what}: size {size} exceeds budget {budget}")


class ConsistencyError(BettiLabError):
    """An internal invariant of the path complex combinatorics failed."""


class DeferredToOracle(BettiLabError):
    """Raised when a closed form has no counting rule in the requested regime."""
