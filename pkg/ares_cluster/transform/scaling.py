"""Non-linear scalings used to test robustness to data representation."""

from __future__ import annotations

import numpy as np

from ares_cluster.data.models import Dataset
from ares_cluster.errors import TransformError
from ares_cluster.transform.models import ScalingKind, ScalingParams


def scale(data: Dataset, params: ScalingParams) -> Dataset:
    """Apply ``params.kind`` per value.

    ``square`` acts on raw values. ``sqrt``, ``log`` and ``inverse`` first
    shift each column by its minimum (x′ = x − min ≥ 0) and then act on
    ``c · (x′ + α)``, which is always positive.

    Raises:
        TransformError: the result is not finite (e.g. ``square`` overflow).
    """
    if params.kind is ScalingKind.IDENTITY:
        return data

    values = data.values
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        if params.kind is ScalingKind.SQUARE:
            scaled = np.square(values)
        else:
            shifted = params.c * (values - values.min(axis=0) + params.alpha)
            if params.kind is ScalingKind.SQRT:
                scaled = np.sqrt(shifted)
            elif params.kind is ScalingKind.LOG:
                scaled = np.log(shifted)
            else:
                scaled = 1.0 / shifted

    bad = np.argwhere(~np.isfinite(scaled))
    if bad.size:
        row, col = (int(v) for v in bad[0])
        raise TransformError(
            f"{params.kind} scaling produced a non-finite value at row {row}, "
            f"column {data.columns[col]!r}"
        )
    return data.with_values(scaled)
