"""Min-max normalization to [0, 1]."""

from __future__ import annotations

import numpy as np

from ares_cluster.data.models import Dataset
from ares_cluster.errors import DimensionMismatchError
from ares_cluster.transform.models import MinMaxModel


def minmax_fit(data: Dataset) -> MinMaxModel:
    return MinMaxModel(mins=data.values.min(axis=0), maxs=data.values.max(axis=0))


def minmax_apply(model: MinMaxModel, data: Dataset) -> Dataset:
    """Map each value to ``(x − min) / (max − min)``; constant columns map to 0."""
    if data.d != model.d:
        raise DimensionMismatchError(model.d, data.d)
    span = model.maxs - model.mins
    constant = span == 0
    safe_span = np.where(constant, 1.0, span)
    scaled = (data.values - model.mins) / safe_span
    scaled[:, constant] = 0.0
    return data.with_values(scaled)


def minmax_normalize(data: Dataset) -> Dataset:
    """Fit on *data* and apply to it."""
    return minmax_apply(minmax_fit(data), data)
