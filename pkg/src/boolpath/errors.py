"""Exception hierarchy shared by every module."""


class LppError(Exception):
    """Base class for all errors raised by boolpath."""


class DimensionError(LppError, ValueError):
    pass


class GraphParseError(LppError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphClassError(LppError, ValueError):
    """Operation called on a graph outside its supported class."""


class NoThresholdError(LppError, ValueError):
    """Binary search predicate never became true inside the bracket."""


class CapacityError(LppError):
    """Result or input exceeds a configured size guard."""


class ConsistencyError(LppError, AssertionError):
    """Two independent computations of the same quantity disagree."""
