"""Pydantic models for datasets and ground-truth labels."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any, Self

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, model_validator

from ares_cluster._arrays import FloatArray, IntArray
from ares_cluster.errors import DatasetError


class Dataset(BaseModel):
    """An n × d matrix of finite reals with unique column names.

    ``values`` is stored as a read-only float64 array, so a Dataset can be
    shared between concurrent runs without copying.
    """

    columns: tuple[str, ...]
    values: FloatArray

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @model_validator(mode="after")
    def _check_invariants(self) -> Self:
        if self.values.ndim != 2:
            raise ValueError(f"values must be two-dimensional, got {self.values.ndim} dimensions")
        n, d = self.values.shape
        if n < 1 or d < 1:
            raise ValueError(f"dataset must have at least one row and column, got {n}×{d}")
        if len(self.columns) != d:
            raise ValueError(f"{len(self.columns)} column names for {d} columns")
        if len(set(self.columns)) != d:
            raise ValueError("column names must be unique")
        bad = np.argwhere(~np.isfinite(self.values))
        if bad.size:
            row, col = (int(v) for v in bad[0])
            raise ValueError(
                f"non-finite value {self.values[row, col]!r} at row {row}, "
                f"column {self.columns[col]!r}"
            )
        return self

    @classmethod
    def build(cls, columns: Sequence[str], values: Any) -> Dataset:
        """Construct a Dataset, translating validation failures into DatasetError."""
        try:
            return cls(columns=tuple(columns), values=values)
        except ValueError as exc:
            raise DatasetError(_first_error(exc)) from exc

    @classmethod
    def from_array(cls, values: Any, prefix: str = "x") -> Dataset:
        """Wrap an array, naming columns ``x0, x1, …``."""
        array = np.asarray(values, dtype=np.float64)
        if array.ndim == 1:
            array = array.reshape(-1, 1)
        d = array.shape[1]
        return cls.build([f"{prefix}{i}" for i in range(d)], array)

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    @property
    def d(self) -> int:
        return int(self.values.shape[1])

    def column(self, index: int) -> NDArray[np.float64]:
        return self.values[:, index]

    def with_values(self, values: Any) -> Dataset:
        """Same columns, new values."""
        return Dataset.build(self.columns, values)

    def take_rows(self, indices: Sequence[int] | NDArray[np.intp]) -> Dataset:
        return Dataset.build(self.columns, self.values[np.asarray(indices, dtype=np.intp)])


class LabelVector(BaseModel):
    """Ground-truth class per point, contiguous integers starting at 0."""

    labels: IntArray

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @model_validator(mode="after")
    def _check_contiguous(self) -> Self:
        present = np.unique(self.labels)
        if not np.array_equal(present, np.arange(present.size)):
            raise ValueError("class identifiers must be contiguous integers starting at 0")
        return self

    @classmethod
    def build(cls, labels: Any) -> LabelVector:
        try:
            return cls(labels=labels)
        except ValueError as exc:
            raise DatasetError(_first_error(exc)) from exc

    @classmethod
    def from_raw(cls, raw: Sequence[Any] | NDArray[Any]) -> LabelVector:
        """Remap arbitrary class values to 0..k−1 in order of first appearance."""
        seen: dict[Any, int] = {}
        codes = [seen.setdefault(value, len(seen)) for value in raw]
        return cls.build(codes)

    @property
    def n(self) -> int:
        return int(self.labels.size)

    @property
    def class_count(self) -> int:
        return int(np.unique(self.labels).size)

    def take_rows(self, indices: Sequence[int] | NDArray[np.intp]) -> LabelVector:
        """Subset rows and remap so identifiers stay contiguous."""
        return LabelVector.from_raw(self.labels[np.asarray(indices, dtype=np.intp)].tolist())


def _first_error(exc: ValueError) -> str:
    errors = getattr(exc, "errors", None)
    if callable(errors):
        details = errors()
        if details:
            return str(details[0].get("msg", exc)).removeprefix("Value error, ")
    return str(exc)
