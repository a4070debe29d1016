"""Shared exception types.

The CLI maps these onto exit codes: bad input (including parse failures and
domain violations) exits 2, refused oversized enumerations exit 3, and a
failed verification run exits 1.
"""


class InvalidInputError(ValueError):
    """Malformed or inconsistent caller input."""


class ParseError(InvalidInputError):
    """Text input that could not be parsed; carries a 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(InvalidInputError):
    """Structurally valid input outside an operation's domain."""


class CapacityError(RuntimeError):
    """Enumeration refused because it exceeds a configured cap."""


class ConvergenceError(RuntimeError):
    """Iterative numeric routine failed to converge within its budget."""
