"""Exception types shared across the toolkit."""


class CmopLaError(Exception):
    """Base class for all toolkit errors."""


class BoundsError(CmopLaError):
    """A decision vector lies outside the problem box bounds."""

    def __init__(self, indices, message=None):
        self.indices = list(indices)
        super().__init__(message or f"coordinates out of bounds at indices {self.indices}")


class ShapeError(CmopLaError):
    """An array or file column block has the wrong arity."""


class EvaluationError(CmopLaError):
    """An evaluator produced a non-finite or otherwise unusable value."""


class ParseError(CmopLaError):
    """A data file is malformed; carries the offending row number."""

    def __init__(self, row, message):
        self.row = row
        super().__init__(f"row {row}: {message}")


class UndefinedIndicatorError(CmopLaError):
    """An indicator is undefined for the given inputs (e.g. empty set)."""


class UnsupportedDimensionError(CmopLaError):
    """Exact hypervolume is only available for 2 or 3 objectives."""


class ConfigError(CmopLaError):
    """A run configuration is invalid or inconsistent."""


class PipelineError(CmopLaError):
    """A pipeline precondition failed (e.g. projection features missing)."""
