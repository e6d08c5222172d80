"""Exception types shared across the package.

Plain ``ValueError`` is used for simple argument misuse (loops, out-of-range
vertices, overlapping sets).  The classes below mark domain-level outcomes
that callers are expected to catch and act on.
"""


class ArcLocalError(Exception):
    """Base class for domain-level errors raised by this package."""


class EdgeListError(ArcLocalError):
    """Malformed edge-list text.  ``line`` is the 1-based offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ClassViolation(ArcLocalError):
    """Input digraph is outside the required class; carries the witness."""

    def __init__(self, witness, message: str):
        super().__init__(message)
        self.witness = witness


class DisconnectedError(ArcLocalError):
    """Operation requires a connected digraph."""


class CapExceeded(ArcLocalError):
    """A brute-force search was refused because the input exceeds its cap."""


class InvariantViolation(ArcLocalError):
    """A structural guarantee failed at runtime.

    Raised when an internal cross-check contradicts a property every valid
    input must have; seeing this exception on an in-class input is a bug.
    """
