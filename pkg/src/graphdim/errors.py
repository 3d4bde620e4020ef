from __future__ import annotations


class GraphDimError(Exception):
    """Root of every error raised by graphdim."""


class GraphValidationError(GraphDimError, ValueError):
    pass


class GraphFormatError(GraphValidationError):
    def __init__(self, reason: str, line: int | None = None) -> None:
        self.reason = reason
        self.line = line
        message = f"line {line}: {reason}" if line is not None else reason
        super().__init__(message)


class MalformedCoverError(GraphValidationError):
    pass


class ResourceLimitError(GraphDimError, RuntimeError):
    pass


class LawViolationError(GraphDimError, AssertionError):
    pass
