"""Sweep transforms × scalings × algorithms over one labelled dataset."""

from __future__ import annotations

import logging
import time
from typing import TYPE_CHECKING

from ares_cluster.data.loaders import load_dataset
from ares_cluster.errors import AresClusterError, ConfigError
from ares_cluster.harness.grid import grid_search
from ares_cluster.harness.models import (
    ExperimentConfig,
    ResultRow,
    ResultTable,
    TransformMethod,
)
from ares_cluster.transform.minmax import minmax_normalize
from ares_cluster.transform.models import ScalingKind, ScalingParams
from ares_cluster.transform.rank import rank_transform
from ares_cluster.transform.scaling import scale

if TYPE_CHECKING:
    from ares_cluster.data.models import Dataset, LabelVector
    from ares_cluster.harness.models import Algorithm

logger = logging.getLogger(__name__)


def prepare(
    data: Dataset,
    transform: TransformMethod,
    scaling: ScalingKind,
    *,
    alpha: float = 0.0001,
    c: float = 100.0,
) -> Dataset:
    """Scale the raw data, then apply the non-ARES part of *transform*.

    ARES is left to the grid search, which refits it per (ψ, t).
    """
    scaled = scale(data, ScalingParams(kind=scaling, alpha=alpha, c=c))
    if transform is TransformMethod.MINMAX:
        return minmax_normalize(scaled)
    if transform is TransformMethod.RANK:
        return rank_transform(scaled)
    return scaled


def run_combination(
    config: ExperimentConfig,
    data: Dataset,
    truth: LabelVector,
    transform: TransformMethod,
    scaling: ScalingKind,
    algorithm: Algorithm,
) -> ResultRow:
    """One result row; a failure becomes an error row instead of propagating."""
    row = ResultRow(
        dataset=config.dataset_name,
        transform=transform,
        scaling=scaling,
        algorithm=algorithm,
    )
    started = time.perf_counter()
    try:
        prepared = prepare(data, transform, scaling, alpha=config.alpha, c=config.c)
        result = grid_search(
            prepared,
            truth,
            algorithm,
            config.grid(),
            config.seed,
            ares=transform is TransformMethod.ARES,
            k=config.k,
            kmeans_restarts=config.kmeans_restarts,
            kmeans_max_iter=config.kmeans_max_iter,
        )
    except AresClusterError as exc:
        logger.warning("%s/%s/%s failed: %s", transform, scaling, algorithm, exc)
        return row.model_copy(
            update={"error": str(exc), "runtime": time.perf_counter() - started}
        )
    except Exception as exc:
        logger.exception("Unexpected failure in %s/%s/%s", transform, scaling, algorithm)
        return row.model_copy(
            update={
                "error": f"{type(exc).__name__}: {exc}",
                "runtime": time.perf_counter() - started,
            }
        )

    runtime = time.perf_counter() - started
    logger.info(
        "%s %s/%s/%s: best f1=%.4f %s (%d points, %.2fs)",
        config.dataset_name,
        transform,
        scaling,
        algorithm,
        result.best_f1,
        result.best_params,
        result.evaluated,
        runtime,
    )
    return row.model_copy(
        update={
            "best_params": result.best_params,
            "best_f1": result.best_f1,
            "evaluated": result.evaluated,
            "runtime": runtime,
        }
    )


def run_experiment(config: ExperimentConfig) -> ResultTable:
    """Evaluate every configured combination and collect the best result of each.

    Raises:
        DatasetError: the dataset cannot be loaded.
        ConfigError: the dataset has no class labels.
    """
    data, truth = load_dataset(config.dataset, config.label_column)
    if truth is None:
        raise ConfigError(f"{config.dataset} has no class labels to evaluate against")
    logger.info(
        "Experiment on %s: n=%d d=%d classes=%d",
        config.dataset_name,
        data.n,
        data.d,
        truth.class_count,
    )

    rows = [
        run_combination(config, data, truth, transform, scaling, algorithm)
        for transform in config.transforms
        for scaling in config.scalings
        for algorithm in config.algorithms
    ]
    return ResultTable.from_rows(rows)
