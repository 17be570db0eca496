"""Lloyd's KMeans with seeded random restarts."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray
from scipy.spatial.distance import cdist

from ares_cluster.cluster.models import ClusteringResult, KMeansParams
from ares_cluster.data.models import Dataset
from ares_cluster.errors import ParameterError
from ares_cluster.rng import child_generator

logger = logging.getLogger(__name__)


@dataclass
class LloydRun:
    """Outcome of one Lloyd's run from a fixed initialization."""

    labels: NDArray[np.intp]
    centroids: NDArray[np.float64]
    sse: float
    iterations: int
    sse_history: list[float] = field(default_factory=list)


def _assign(
    values: NDArray[np.float64], centroids: NDArray[np.float64]
) -> tuple[NDArray[np.intp], NDArray[np.float64]]:
    """Nearest centroid per point (ties → lowest index) and squared distance to it."""
    distances = cdist(values, centroids, metric="sqeuclidean")
    labels = np.argmin(distances, axis=1)
    return labels, distances[np.arange(values.shape[0]), labels]


def _reseed_empty(
    values: NDArray[np.float64],
    labels: NDArray[np.intp],
    sq_dist: NDArray[np.float64],
    k: int,
) -> NDArray[np.intp]:
    """Move the point farthest from its centroid into each empty cluster."""
    counts = np.bincount(labels, minlength=k)
    empty = np.flatnonzero(counts == 0)
    if empty.size == 0:
        return labels
    labels = labels.copy()
    available = sq_dist.copy()
    for cluster in empty:
        counts = np.bincount(labels, minlength=k)
        # never take the last member of a cluster
        available[counts[labels] <= 1] = -np.inf
        farthest = int(np.argmax(available))
        labels[farthest] = cluster
        available[farthest] = -np.inf
    return labels


def lloyd(
    values: NDArray[np.float64],
    initial: NDArray[np.float64],
    max_iter: int,
) -> LloydRun:
    """Alternate nearest-centroid assignment and mean updates until the labels stop changing.

    Duplicate rows can make the reseeded cluster lose its point again on the
    next assignment. If the run hits ``max_iter`` in that state, the empty
    clusters are reseeded once more and kept without reassignment, so every
    cluster in the result has at least one member.
    """
    k = initial.shape[0]
    centroids = initial.copy()
    labels, sq_dist = _assign(values, centroids)
    history = [float(sq_dist.sum())]
    iterations = 0
    for iterations in range(1, max_iter + 1):
        labels = _reseed_empty(values, labels, sq_dist, k)
        centroids = np.stack([values[labels == c].mean(axis=0) for c in range(k)])
        new_labels, sq_dist = _assign(values, centroids)
        history.append(float(sq_dist.sum()))
        if np.array_equal(new_labels, labels):
            break
        labels = new_labels
    if np.bincount(labels, minlength=k).min() == 0:
        labels = _reseed_empty(values, labels, sq_dist, k)
        centroids = np.stack([values[labels == c].mean(axis=0) for c in range(k)])
        history.append(float(((values - centroids[labels]) ** 2).sum()))
        logger.debug("Lloyd stopped at max_iter=%d with an empty cluster; reseeded", max_iter)
    return LloydRun(
        labels=labels,
        centroids=centroids,
        sse=history[-1],
        iterations=iterations,
        sse_history=history,
    )


def kmeans_run(data: Dataset, params: KMeansParams) -> ClusteringResult:
    """Best of ``params.restarts`` Lloyd's runs by SSE (ties → earliest restart).

    Each restart starts from k distinct rows drawn uniformly with its own
    child stream of ``params.seed``.

    Raises:
        ParameterError: k exceeds the number of rows.
    """
    if params.k > data.n:
        raise ParameterError(f"k={params.k} exceeds the {data.n} rows of the data")

    values = data.values
    best: LloydRun | None = None
    for restart in range(params.restarts):
        rng = child_generator(params.seed, restart)
        initial = values[rng.choice(data.n, params.k, replace=False)]
        run = lloyd(values, initial, params.max_iter)
        logger.debug(
            "KMeans restart %d: sse=%.6g after %d iterations", restart, run.sse, run.iterations
        )
        if best is None or run.sse < best.sse:
            best = run

    assert best is not None
    return ClusteringResult(assignments=best.labels, k=params.k, objective=best.sse)
