"""ARES: average rank over an ensemble of sub-samples.

Each feature gets t sorted sub-samples of ψ values. A value's rank in one
sub-sample is the number of sample values strictly below it, found by
binary search, so applying the model to n rows costs O(n · t · log ψ).
The transformed value is the mean of the t ranks, divided by ψ when
``normalize_output`` is set.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import TYPE_CHECKING

import numpy as np
from numpy.typing import NDArray
from pydantic import ValidationError

from ares_cluster.errors import DatasetError, DimensionMismatchError, ParameterError
from ares_cluster.rng import FEATURE_STREAM_OFFSET, SHARED_STREAM, child_generator
from ares_cluster.transform.models import (
    ARES_MODEL_VERSION,
    AresModel,
    AresParams,
    SamplingMode,
)

if TYPE_CHECKING:
    from os import PathLike

    from ares_cluster.data.models import Dataset

logger = logging.getLogger(__name__)


def shared_sample_indices(n: int, params: AresParams) -> NDArray[np.intp]:
    """Row indices of every ensemble member, shape ``(t, ψ)``.

    Depends only on ``(n, ψ, t, seed)``, so any per-feature re-scaling of
    the data draws the same rows.
    """
    return np.stack(
        [
            child_generator(params.seed, SHARED_STREAM, j).choice(n, params.psi, replace=False)
            for j in range(params.t)
        ]
    )


def ares_fit(data: Dataset, params: AresParams) -> AresModel:
    """Draw t sub-samples of ψ values without replacement per feature and sort them.

    Raises:
        ParameterError: ψ exceeds the number of rows.
    """
    if params.psi > data.n:
        raise ParameterError(f"psi={params.psi} exceeds the {data.n} rows of the data")

    values = data.values
    samples = np.empty((data.d, params.t, params.psi), dtype=np.float64)
    if params.sampling is SamplingMode.SHARED:
        indices = shared_sample_indices(data.n, params)
        for i in range(data.d):
            samples[i] = values[indices, i]
    else:
        for i in range(data.d):
            for j in range(params.t):
                rng = child_generator(params.seed, FEATURE_STREAM_OFFSET + i, j)
                samples[i, j] = values[rng.choice(data.n, params.psi, replace=False), i]
    samples.sort(axis=2)

    logger.debug("Fitted ARES psi=%d t=%d on n=%d d=%d", params.psi, params.t, data.n, data.d)
    return AresModel(
        psi=params.psi,
        t=params.t,
        seed=params.seed,
        normalize_output=params.normalize_output,
        sampling=params.sampling,
        columns=data.columns,
        samples=samples,
    )


def ares_rank_totals(model: AresModel, data: Dataset) -> NDArray[np.int64]:
    """Sum over sub-samples of ``|{y in D_j: y < x}|`` for every cell (exact integers)."""
    if data.d != model.d:
        raise DimensionMismatchError(model.d, data.d)
    totals = np.zeros(data.values.shape, dtype=np.int64)
    for i in range(model.d):
        column = data.values[:, i]
        for sample in model.samples[i]:
            totals[:, i] += np.searchsorted(sample, column, side="left")
    return totals


def ares_apply(model: AresModel, data: Dataset) -> Dataset:
    """Replace each value by its average rank over the ensemble.

    Raw outputs lie in ``[0, ψ]``; normalized outputs in ``[0, 1]``.
    Rows are independent, so applying to row blocks and concatenating gives
    the same result as one call.
    """
    totals = ares_rank_totals(model, data)
    divisor = model.t * model.psi if model.normalize_output else model.t
    return data.with_values(totals / divisor)


def ares_transform(data: Dataset, params: AresParams) -> Dataset:
    """Fit on *data* and apply to it."""
    return ares_apply(ares_fit(data, params), data)


def ares_transform_by_index(data: Dataset, params: AresParams) -> Dataset:
    """ARES with shared row-index sub-samples, fitted and applied on *data*.

    Invariant under any strictly increasing per-feature map of *data*.
    """
    shared = params.model_copy(update={"sampling": SamplingMode.SHARED})
    return ares_transform(data, shared)


def save_ares_model(model: AresModel, path: str | PathLike[str]) -> None:
    try:
        Path(path).write_text(model.model_dump_json(), encoding="utf-8")
    except OSError as exc:
        raise DatasetError(f"cannot write {path}: {exc}") from exc


def load_ares_model(path: str | PathLike[str]) -> AresModel:
    """Read a model written by :func:`save_ares_model`.

    Raises:
        DatasetError: unreadable file, unsupported version or invalid content.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DatasetError(f"cannot read {path}: {exc}") from exc
    try:
        model = AresModel.model_validate_json(text)
    except ValidationError as exc:
        raise DatasetError(f"invalid ARES model {path}: {exc.errors()[0]['msg']}") from exc
    if model.version != ARES_MODEL_VERSION:
        raise DatasetError(f"unsupported ARES model version {model.version}")
    return model
