"""Exception types shared across the package.

Every error raised on purpose carries a single-line message so the CLI can
emit it as a machine-parsable ``error`` field.
"""


class StrongOrientError(Exception):
    """Base class for all errors raised on purpose by this package."""


class ParseError(StrongOrientError):
    """Malformed graph input (bad header, bad edge line, loop, duplicate)."""


class DomainError(StrongOrientError):
    """Arguments outside an operation's domain (parity, degeneracy, range)."""


class SizeLimitError(DomainError):
    """Input exceeds a documented size guard for an exact computation."""


class SamplingError(StrongOrientError):
    """A randomized generator exhausted its attempt budget."""


class NumericError(StrongOrientError):
    """A numerical routine failed to converge or lost required accuracy."""
