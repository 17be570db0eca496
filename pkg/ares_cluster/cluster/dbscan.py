"""DBSCAN over closed Euclidean ε-balls."""

from __future__ import annotations

import logging
from collections import deque

import numpy as np
from numpy.typing import NDArray

from ares_cluster.cluster.distance import distance_blocks
from ares_cluster.cluster.models import NOISE, ClusteringResult, DbscanParams
from ares_cluster.data.models import Dataset

logger = logging.getLogger(__name__)

_UNASSIGNED = -2


def region_queries(data: Dataset, eps: float) -> list[NDArray[np.intp]]:
    """Indices within distance ≤ eps of each row, the row itself included, ascending."""
    neighbors: list[NDArray[np.intp]] = []
    for _start, block in distance_blocks(data.values):
        neighbors.extend(np.flatnonzero(row <= eps) for row in block)
    return neighbors


def dbscan_run(data: Dataset, params: DbscanParams) -> ClusteringResult:
    """Cluster by density-reachability.

    A point is core when its closed ε-ball holds at least ``min_pts`` points.
    Rows are scanned in index order; each unvisited core point starts a
    cluster that grows breadth-first through core points. A border point
    joins the first cluster that reaches it. Everything else is NOISE.
    """
    neighbors = region_queries(data, params.eps)
    core = np.array([hood.size >= params.min_pts for hood in neighbors], dtype=bool)
    labels = np.full(data.n, _UNASSIGNED, dtype=np.int64)

    cluster = 0
    for seed in range(data.n):
        if labels[seed] != _UNASSIGNED or not core[seed]:
            continue
        labels[seed] = cluster
        queue = deque([seed])
        while queue:
            point = queue.popleft()
            for other in neighbors[point]:
                if labels[other] != _UNASSIGNED:
                    continue
                labels[other] = cluster
                if core[other]:
                    queue.append(int(other))
        cluster += 1

    labels[labels == _UNASSIGNED] = NOISE
    logger.debug(
        "DBSCAN eps=%g min_pts=%d: %d clusters, %d noise",
        params.eps,
        params.min_pts,
        cluster,
        int(np.count_nonzero(labels == NOISE)),
    )
    return ClusteringResult(assignments=labels, k=cluster)
