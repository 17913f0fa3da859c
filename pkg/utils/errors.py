"""
Exception hierarchy for the graph algebra toolkit.

Everything raised on purpose derives from GalgError so the CLI and the HTTP
surface can map failures to exit codes / status codes in one place.
"""

from typing import Optional


class GalgError(Exception):
    """Base class for all deliberate failures."""


class GraphParseError(GalgError, ValueError):
    """Malformed graph or polynomial text."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class InvalidInputError(GalgError, ValueError):
    """An argument violates an operation's precondition."""


class NotAForestError(InvalidInputError):
    pass


class DisconnectedGraphError(InvalidInputError):
    def __init__(self, message: str = "tree algebra requires connected graph"):
        super().__init__(message)


class AmbientMismatchError(InvalidInputError):
    pass


class NotNilpotentError(InvalidInputError):
    def __init__(self, message: str = "not nilpotent"):
        super().__init__(message)


class ConfigError(GalgError, ValueError):
    pass


class BoundExceededError(GalgError):
    """A configured resource bound would be exceeded."""

    def __init__(self, bound_name: str, bound: int, actual: int):
        self.bound_name = bound_name
        self.bound = bound
        self.actual = actual
        super().__init__(f"{bound_name} exceeded: {actual} > {bound}")


class InconsistentFamilyError(GalgError):
    def __init__(self, detail: str = ""):
        message = "not a consistent vertex-generator family"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class InternalInconsistencyError(GalgError):
    """A quantity a theorem guarantees came out wrong."""
