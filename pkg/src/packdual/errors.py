"""Exception hierarchy shared by the library and the CLI."""


class PackingError(Exception):
    """Base class for every error raised by packdual."""


class InputError(PackingError, ValueError):
    """Malformed or out-of-range input (CLI exit code 2)."""


class ParseError(InputError):
    """A file could not be parsed. ``line`` is 1-based, or None for whole-file problems."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ContractViolation(PackingError):
    """A solution handed to a solution map or verifier is infeasible."""


class InvariantViolation(PackingError, AssertionError):
    """An internal guarantee failed; indicates a bug or a corrupted witness."""
