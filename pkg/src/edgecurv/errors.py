"""Exception types raised by edgecurv."""


class EdgecurvError(Exception):
    """Base class for all library errors."""


class NetworkParseError(EdgecurvError):
    """Malformed network input; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ContractViolation(EdgecurvError):
    """An operation was called outside its precondition."""


class CurvatureUndefined(EdgecurvError):
    """Ollivier curvature requested for a hyperedge with an empty side."""
