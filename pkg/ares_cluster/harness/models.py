"""Pydantic models for experiment sweeps and their results."""

from __future__ import annotations

import itertools
from enum import StrEnum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ares_cluster.transform.models import ScalingKind

ParamValue = int | float
GridPoint = dict[str, ParamValue]

DEFAULT_EPS: tuple[float, ...] = tuple(round(0.01 * i, 2) for i in range(1, 51))
DEFAULT_MIN_PTS: tuple[int, ...] = (4, 5, 6, 7, 8)
DEFAULT_PSI: tuple[int, ...] = tuple(2**i for i in range(6))
DEFAULT_T: tuple[int, ...] = (10, 25, 50, 100)


class TransformMethod(StrEnum):
    MINMAX = "minmax"
    ARES = "ares"
    RANK = "rank"


class Algorithm(StrEnum):
    DBSCAN = "dbscan"
    DP = "dp"
    KMEANS = "kmeans"


class ParameterGrid(BaseModel):
    """Value lists swept by a grid search, enumerated in the listed order."""

    eps: list[float] = Field(default_factory=lambda: list(DEFAULT_EPS), min_length=1)
    min_pts: list[int] = Field(default_factory=lambda: list(DEFAULT_MIN_PTS), min_length=1)
    psi: list[int] = Field(default_factory=lambda: list(DEFAULT_PSI), min_length=1)
    t: list[int] = Field(default_factory=lambda: list(DEFAULT_T), min_length=1)

    model_config = ConfigDict(frozen=True)

    def transform_points(self, ares: bool) -> list[GridPoint]:
        if not ares:
            return [{}]
        return [{"psi": psi, "t": t} for psi, t in itertools.product(self.psi, self.t)]

    def algorithm_points(self, algorithm: Algorithm) -> list[GridPoint]:
        if algorithm is Algorithm.DBSCAN:
            return [
                {"eps": eps, "min_pts": min_pts}
                for eps, min_pts in itertools.product(self.eps, self.min_pts)
            ]
        if algorithm is Algorithm.DP:
            return [{"eps": eps} for eps in self.eps]
        return [{}]

    def candidates(self, algorithm: Algorithm, ares: bool) -> list[GridPoint]:
        """Transform parameters vary slowest, algorithm parameters fastest."""
        return [
            {**outer, **inner}
            for outer in self.transform_points(ares)
            for inner in self.algorithm_points(algorithm)
        ]

    def size(self, algorithm: Algorithm, ares: bool) -> int:
        return len(self.transform_points(ares)) * len(self.algorithm_points(algorithm))


class GridSearchResult(BaseModel):
    best_params: GridPoint
    best_f1: float
    evaluated: int


def _split_list(value: Any) -> Any:
    if isinstance(value, str):
        return [item.strip() for item in value.split(",") if item.strip()]
    return value


class ExperimentConfig(BaseModel):
    """A transform × scaling × algorithm sweep over one labelled dataset."""

    dataset: Path
    label_column: str | None = "class"
    name: str | None = None
    transforms: list[TransformMethod] = Field(
        default_factory=lambda: list(TransformMethod), min_length=1
    )
    scalings: list[ScalingKind] = Field(
        default_factory=lambda: [ScalingKind.IDENTITY], min_length=1
    )
    algorithms: list[Algorithm] = Field(default_factory=lambda: list(Algorithm), min_length=1)
    eps: list[float] = Field(default_factory=lambda: list(DEFAULT_EPS), min_length=1)
    min_pts: list[int] = Field(default_factory=lambda: list(DEFAULT_MIN_PTS), min_length=1)
    psi: list[int] = Field(default_factory=lambda: list(DEFAULT_PSI), min_length=1)
    t: list[int] = Field(default_factory=lambda: list(DEFAULT_T), min_length=1)
    k: int | None = Field(default=None, ge=1)
    seed: int = Field(default=0, ge=0)
    kmeans_restarts: int = Field(default=10, ge=1)
    kmeans_max_iter: int = Field(default=100, ge=1)
    alpha: float = Field(default=0.0001, gt=0)
    c: float = Field(default=100.0, gt=0)

    model_config = ConfigDict(extra="forbid")

    split_lists = field_validator(
        "transforms", "scalings", "algorithms", "eps", "min_pts", "psi", "t", mode="before"
    )(_split_list)

    @field_validator("label_column", mode="before")
    @classmethod
    def _blank_label_column(cls, value: Any) -> Any:
        if isinstance(value, str) and value.strip().lower() in {"", "none"}:
            return None
        return value

    @property
    def dataset_name(self) -> str:
        return self.name or self.dataset.stem

    def grid(self) -> ParameterGrid:
        return ParameterGrid(eps=self.eps, min_pts=self.min_pts, psi=self.psi, t=self.t)


class ResultRow(BaseModel):
    dataset: str
    transform: TransformMethod
    scaling: ScalingKind
    algorithm: Algorithm
    best_params: GridPoint = Field(default_factory=dict)
    best_f1: float | None = Field(default=None, ge=0, le=1)
    runtime: float = 0.0
    evaluated: int = 0
    error: str | None = None

    def sort_key(self) -> tuple[str, str, str, str]:
        return (self.dataset, self.algorithm.value, self.transform.value, self.scaling.value)


class ResultTable(BaseModel):
    """Best result per combination, sorted by (dataset, algorithm, transform, scaling)."""

    rows: list[ResultRow] = Field(default_factory=list)

    @classmethod
    def from_rows(cls, rows: list[ResultRow]) -> ResultTable:
        return cls(rows=sorted(rows, key=ResultRow.sort_key))

    def find(
        self,
        *,
        transform: TransformMethod,
        scaling: ScalingKind,
        algorithm: Algorithm,
    ) -> ResultRow | None:
        for row in self.rows:
            if (row.transform, row.scaling, row.algorithm) == (transform, scaling, algorithm):
                return row
        return None
