"""Exception hierarchy for ares_cluster."""

from __future__ import annotations


class AresClusterError(Exception):
    """Base exception for all library errors."""


class DatasetError(AresClusterError):
    """A dataset file or value failed to parse or validate."""

    def __init__(self, message: str, *, row: int | None = None, column: str | None = None) -> None:
        self.row = row
        self.column = column
        location = []
        if row is not None:
            location.append(f"row {row}")
        if column is not None:
            location.append(f"column {column!r}")
        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message)


class UnsupportedFeatureError(DatasetError):
    """The file uses a format feature outside the supported subset."""


class ColumnNotFoundError(DatasetError):
    """A named column does not exist."""

    def __init__(self, name: str, suggestion: str | None = None) -> None:
        self.name = name
        self.suggestion = suggestion
        message = f"unknown column {name!r}"
        if suggestion is not None:
            message += f"; did you mean {suggestion!r}?"
        super().__init__(message)


class DimensionMismatchError(AresClusterError):
    """Data dimensionality does not match a fitted model or another operand."""

    def __init__(self, expected: int, actual: int) -> None:
        self.expected = expected
        self.actual = actual
        super().__init__(f"dimension mismatch: expected {expected}, got {actual}")


class ParameterError(AresClusterError):
    """Invalid algorithm, transform or grid parameters."""


class TransformError(AresClusterError):
    """A transformation produced non-finite output."""


class ConfigError(AresClusterError):
    """Experiment configuration could not be read or validated."""


class FetchError(AresClusterError):
    """Base exception for dataset download errors."""

    def __init__(self, status_code: int, message: str) -> None:
        self.status_code = status_code
        self.message = message
        super().__init__(f"download error {status_code}: {message}")


class FetchNotFoundError(FetchError):
    """404 Not Found."""


class FetchRateLimitError(FetchError):
    """429 Too Many Requests or a 5xx the mirror reports as overload."""
