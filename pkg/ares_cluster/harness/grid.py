"""Exhaustive grid search of one clusterer over one prepared dataset."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import TYPE_CHECKING

from ares_cluster.cluster.dbscan import dbscan_run
from ares_cluster.cluster.density_peak import dp_run
from ares_cluster.cluster.kmeans import kmeans_run
from ares_cluster.cluster.models import DbscanParams, DpParams, KMeansParams
from ares_cluster.config import settings
from ares_cluster.errors import ParameterError
from ares_cluster.evaluation.f1 import f1_measure
from ares_cluster.harness.models import Algorithm, GridPoint, GridSearchResult, ParameterGrid
from ares_cluster.rng import KMEANS_STREAM, derive_seed
from ares_cluster.transform.ares import ares_transform_by_index
from ares_cluster.transform.models import AresParams

if TYPE_CHECKING:
    from ares_cluster.cluster.models import ClusteringResult
    from ares_cluster.data.models import Dataset, LabelVector

logger = logging.getLogger(__name__)

DEFAULT_KMEANS_RESTARTS = 10
DEFAULT_KMEANS_MAX_ITER = 100


def run_algorithm(
    data: Dataset,
    algorithm: Algorithm,
    point: GridPoint,
    *,
    k: int,
    seed: int,
    restarts: int = DEFAULT_KMEANS_RESTARTS,
    max_iter: int = DEFAULT_KMEANS_MAX_ITER,
) -> ClusteringResult:
    """Run *algorithm* with the algorithm part of one grid point."""
    if algorithm is Algorithm.DBSCAN:
        return dbscan_run(
            data, DbscanParams(eps=float(point["eps"]), min_pts=int(point["min_pts"]))
        )
    if algorithm is Algorithm.DP:
        return dp_run(data, DpParams(k=k, d_c=float(point["eps"])))
    return kmeans_run(
        data, KMeansParams(k=k, seed=seed, restarts=restarts, max_iter=max_iter)
    )


def grid_search(
    data: Dataset,
    truth: LabelVector,
    algorithm: Algorithm,
    grid: ParameterGrid,
    seed: int,
    *,
    ares: bool = False,
    k: int | None = None,
    kmeans_restarts: int = DEFAULT_KMEANS_RESTARTS,
    kmeans_max_iter: int = DEFAULT_KMEANS_MAX_ITER,
    max_workers: int | None = None,
) -> GridSearchResult:
    """Best F1 over every grid point, ties going to the first in enumeration order.

    With ``ares=True`` *data* is untransformed and ARES (shared row-index
    sampling, normalized output, seeded with *seed*) is fitted once per
    (ψ, t) pair. KMeans at grid index g is seeded with
    ``derive_seed(seed, KMEANS_STREAM, g)``, so results do not depend on
    *max_workers*.

    Raises:
        ParameterError: the grid is empty, or a point is infeasible for the
            data (ψ or k above n).
    """
    candidates = grid.candidates(algorithm, ares)
    if not candidates:
        raise ParameterError("empty parameter grid")
    clusters = truth.class_count if k is None else k
    if truth.n != data.n:
        raise ParameterError(f"{truth.n} labels for {data.n} rows")

    prepared: dict[tuple[int, int], Dataset] = {}
    if ares:
        for point in grid.transform_points(ares):
            key = (int(point["psi"]), int(point["t"]))
            prepared[key] = ares_transform_by_index(
                data, AresParams(psi=key[0], t=key[1], seed=seed)
            )

    def evaluate(index: int, point: GridPoint) -> float:
        target = prepared[(int(point["psi"]), int(point["t"]))] if ares else data
        result = run_algorithm(
            target,
            algorithm,
            point,
            k=clusters,
            seed=derive_seed(seed, KMEANS_STREAM, index),
            restarts=kmeans_restarts,
            max_iter=kmeans_max_iter,
        )
        score = f1_measure(truth, result)
        logger.debug("%s %s: f1=%.4f", algorithm, point, score)
        return score

    workers = settings.max_workers if max_workers is None else max_workers
    indices = range(len(candidates))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            scores = list(pool.map(evaluate, indices, candidates))
    else:
        scores = [evaluate(index, point) for index, point in zip(indices, candidates, strict=True)]

    best = 0
    for index, score in enumerate(scores):
        if score > scores[best]:
            best = index
    return GridSearchResult(
        best_params=candidates[best],
        best_f1=scores[best],
        evaluated=len(scores),
    )
