import sys

from powermatch.utils.exceptions import AppException, VerificationFailed
from powermatch.utils.logger import get_logger

log = get_logger()

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INPUT = 4
EXIT_CERTIFICATION = 5


def _say(text: str) -> None:
    print(text, file=sys.stderr)


def global_error_handler(error: Exception) -> int:
    """Global errors handler."""

    log.error("(%s) %s", error.__class__.__name__, error)
    _say(f"error: {error}")
    return EXIT_VERIFICATION


def usage_error(error: AppException) -> int:
    """Error handler for arguments outside an operation's domain and flag misuse."""

    log.debug("(%s) %s", error.__class__.__name__, error.message)
    _say(f"usage error: {error.message}")
    return EXIT_USAGE


def io_error(error: OSError) -> int:
    """Error handler for OSError exception."""

    log.critical("I/O failure: %s", error)
    _say(f"i/o error: {error}")
    return EXIT_IO


def input_error(error: AppException) -> int:
    """Error handler for malformed documents, invalid tables and broken contracts."""

    log.warning("(%s) %s", error.__class__.__name__, error.message)
    _say(f"invalid input: {error.message}")
    return EXIT_INPUT


def certification_error(error: AppException) -> int:
    """Error handler for invariant violations and failed certification."""

    log.error("(%s) %s", error.__class__.__name__, error.message)
    _say(f"certification failed: {error.message}")
    return EXIT_CERTIFICATION


def verification_failed(error: VerificationFailed) -> int:
    """Error handler for VerificationFailed exception."""

    log.warning("Verification failed with %d failed checks", error.failed)
    _say(error.message)
    return EXIT_VERIFICATION
