"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """A graph file could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ConfigurationError(ValueError):
    """Invalid solver configuration (bad imposition order, weights, bounds)."""


class GuardExceeded(RuntimeError):
    """An exhaustive routine refused to run above its size guard."""


class SearchTimeout(RuntimeError):
    """A solver run exceeded its deadline."""


class StackBoundWarning(RuntimeWarning):
    """The working stack grew beyond the edge-count bound claimed for it.

    The bound lacks a proof, so violations are observations, not errors.
    """
