"""Pydantic models for clustering parameters and results."""

from __future__ import annotations

from typing import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ares_cluster._arrays import IntArray

NOISE = -1


class ClusteringResult(BaseModel):
    """Cluster id per point in ``[0, k)``, or :data:`NOISE`."""

    assignments: IntArray
    k: int = Field(ge=0)
    objective: float | None = None  # KMeans SSE

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @model_validator(mode="after")
    def _check_ids(self) -> Self:
        if self.assignments.ndim != 1:
            raise ValueError("assignments must be a vector")
        clustered = self.assignments[self.assignments != NOISE]
        if clustered.size and (clustered.min() < 0 or clustered.max() >= self.k):
            raise ValueError(f"cluster ids must lie in [0, {self.k}) or be NOISE")
        return self

    @property
    def n(self) -> int:
        return int(self.assignments.size)

    @property
    def noise_count(self) -> int:
        return int(np.count_nonzero(self.assignments == NOISE))

    def partition(self) -> frozenset[frozenset[int]]:
        """Point sets per cluster (NOISE forms its own set), for label-free comparison."""
        groups: dict[int, set[int]] = {}
        for index, cluster in enumerate(self.assignments.tolist()):
            groups.setdefault(cluster, set()).add(index)
        return frozenset(frozenset(members) for members in groups.values())


class KMeansParams(BaseModel):
    k: int = Field(ge=1)
    max_iter: int = Field(default=100, ge=1)
    restarts: int = Field(default=10, ge=1)
    seed: int = Field(default=0, ge=0)

    model_config = ConfigDict(frozen=True)


class DbscanParams(BaseModel):
    eps: float = Field(gt=0)
    min_pts: int = Field(ge=1)

    model_config = ConfigDict(frozen=True)


class DpParams(BaseModel):
    """Density Peak parameters; ``d_c`` is the cutoff distance (ε in the sweeps)."""

    k: int = Field(ge=1)
    d_c: float = Field(gt=0)

    model_config = ConfigDict(frozen=True)
