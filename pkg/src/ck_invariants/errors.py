"""Exception types shared across the package.

The three classes mirror the failure categories surfaced by the CLI and the
HTTP service: bad input (exit 1 / HTTP 400), a size guard tripping
(exit 2 / HTTP 422), and an internal consistency check failing, which always
indicates a bug rather than a data condition (exit 3 / HTTP 500).
"""


class CkError(Exception):
    """Base class for all package-specific errors."""


class InvalidPresentation(CkError):
    """The input document or matrix presentation failed validation."""


class GuardExceeded(CkError):
    """A size guard was exceeded (too many patterns, period lcm too large)."""


class InternalInvariantError(CkError):
    """An internal cross-check failed; this signals a bug, not bad input."""
