class AppException(Exception):
    """Base exception class for this application."""

    def __init__(self, message):
        super().__init__(message)
        self.message = message


class DomainError(AppException):
    """This exception is raised when an argument is outside the domain of an operation."""


class GroupSizeError(DomainError):
    """This exception is raised when a group would exceed the order cap."""


class GuardExceededError(DomainError):
    """This exception is raised when an exhaustive search refuses an oversized input."""


class UsageError(AppException):
    """This exception is raised on command-line flag misuse."""


class DocumentParseError(AppException):
    """This exception is raised when a group, graph or matching document is malformed."""


class GroupValidationError(AppException):
    """This exception is raised when a Cayley table violates a group axiom."""


class ContractError(AppException):
    """This exception is raised when an input violates an operation contract."""


class InvariantViolationError(AppException):
    """This exception is raised when a construction fails a promised property."""


class CertificationError(AppException):
    """This exception is raised when a certified result disagrees with its oracle."""


class VerificationFailed(AppException):
    """This exception is raised when the theorem suite has failed checks."""

    def __init__(self, message, failed: int = 0):
        super().__init__(message)
        self.failed = failed
