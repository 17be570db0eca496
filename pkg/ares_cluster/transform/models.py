"""Pydantic models for fitted transformations and their parameters."""

from __future__ import annotations

from enum import StrEnum
from typing import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ares_cluster._arrays import FloatArray

ARES_MODEL_VERSION = 1


class SamplingMode(StrEnum):
    """How ARES picks its sub-samples."""

    SHARED = "shared"  # one row-index set per ensemble member, reused by every feature
    PER_FEATURE = "per_feature"


class ScalingKind(StrEnum):
    """Non-linear re-representations of a feature."""

    IDENTITY = "identity"
    SQUARE = "square"
    SQRT = "sqrt"
    LOG = "log"
    INVERSE = "inverse"


class AresParams(BaseModel):
    """Ensemble size, sub-sample size and seed for ARES."""

    psi: int = Field(ge=1)
    t: int = Field(ge=1)
    seed: int = Field(default=0, ge=0)
    normalize_output: bool = True
    sampling: SamplingMode = SamplingMode.SHARED

    model_config = ConfigDict(frozen=True)


class AresModel(BaseModel):
    """Per-feature ensembles of sorted sub-samples.

    ``samples[i, j]`` holds the ψ sorted values of sub-sample j for feature i;
    together they split each feature's real line into ψ + 1 rank bins.
    """

    version: int = ARES_MODEL_VERSION
    psi: int = Field(ge=1)
    t: int = Field(ge=1)
    seed: int = Field(ge=0)
    normalize_output: bool = True
    sampling: SamplingMode = SamplingMode.SHARED
    columns: tuple[str, ...]
    samples: FloatArray

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @model_validator(mode="after")
    def _check_shape(self) -> Self:
        expected = (len(self.columns), self.t, self.psi)
        if self.samples.shape != expected:
            raise ValueError(f"samples shape {self.samples.shape} != {expected}")
        if np.any(np.diff(self.samples, axis=2) < 0):
            raise ValueError("every sub-sample must be sorted non-decreasing")
        return self

    @property
    def d(self) -> int:
        return len(self.columns)


class ScalingParams(BaseModel):
    """A scaling kind plus the shift α and multiplier c used before sqrt/log/inverse."""

    kind: ScalingKind
    alpha: float = Field(default=0.0001, gt=0)
    c: float = Field(default=100.0, gt=0)

    model_config = ConfigDict(frozen=True)


class MinMaxModel(BaseModel):
    """Observed per-feature minimum and maximum."""

    mins: FloatArray
    maxs: FloatArray

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @model_validator(mode="after")
    def _check_bounds(self) -> Self:
        if self.mins.shape != self.maxs.shape or self.mins.ndim != 1:
            raise ValueError("mins and maxs must be vectors of equal length")
        if np.any(self.maxs < self.mins):
            raise ValueError("max must be >= min for every feature")
        return self

    @property
    def d(self) -> int:
        return int(self.mins.size)
