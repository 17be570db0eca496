"""Density Peak clustering with a cutoff kernel and top-γ center selection."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from ares_cluster.cluster.distance import distance_blocks
from ares_cluster.cluster.models import ClusteringResult, DpParams
from ares_cluster.data.models import Dataset
from ares_cluster.errors import ParameterError

logger = logging.getLogger(__name__)


@dataclass
class DecisionGraph:
    """Per-point quantities behind the center choice.

    ``order`` lists points from densest to sparsest; equal densities keep
    index order, so a point is "higher" than every point after it.
    ``parent[i]`` is the nearest higher point (−1 for the top point).
    """

    rho: NDArray[np.int64]
    delta: NDArray[np.float64]
    gamma: NDArray[np.float64]
    parent: NDArray[np.intp]
    order: NDArray[np.intp]


def _local_density(data: Dataset, d_c: float) -> NDArray[np.int64]:
    """``|{j ≠ i : d(i, j) < d_c}|``."""
    rho = np.empty(data.n, dtype=np.int64)
    for start, block in distance_blocks(data.values):
        # the diagonal distance is 0 < d_c, so drop one self-count per row
        rho[start : start + block.shape[0]] = np.count_nonzero(block < d_c, axis=1) - 1
    return rho


def decision_graph(data: Dataset, d_c: float) -> DecisionGraph:
    rho = _local_density(data, d_c)
    order = np.lexsort((np.arange(data.n), -rho))
    position = np.empty(data.n, dtype=np.intp)
    position[order] = np.arange(data.n)

    delta = np.empty(data.n, dtype=np.float64)
    parent = np.full(data.n, -1, dtype=np.intp)
    top = int(order[0])
    for start, block in distance_blocks(data.values):
        rows = np.arange(start, start + block.shape[0])
        higher = position[None, :] < position[rows, None]
        masked = np.where(higher, block, np.inf)
        nearest = np.argmin(masked, axis=1)
        delta[rows] = masked[np.arange(rows.size), nearest]
        parent[rows] = nearest
        if start <= top < start + block.shape[0]:
            delta[top] = block[top - start].max()
    parent[top] = -1

    return DecisionGraph(
        rho=rho,
        delta=delta,
        gamma=rho * delta,
        parent=parent,
        order=order,
    )


def select_centers(graph: DecisionGraph, k: int) -> NDArray[np.intp]:
    """The k points with largest γ (ties → lower index), always including the top point."""
    n = graph.gamma.size
    ranked = np.lexsort((np.arange(n), -graph.gamma))
    centers = ranked[:k].copy()
    top = graph.order[0]
    if top not in centers:
        centers[-1] = top
    return centers


def dp_run(data: Dataset, params: DpParams) -> ClusteringResult:
    """Density Peak clustering.

    Centers are the k points maximizing ρ·δ. Every other point, visited
    from densest to sparsest, takes the cluster of its nearest higher-density
    point. No halo is detected, so no point is NOISE.

    Raises:
        ParameterError: k exceeds the number of rows.
    """
    if params.k > data.n:
        raise ParameterError(f"k={params.k} exceeds the {data.n} rows of the data")

    graph = decision_graph(data, params.d_c)
    centers = select_centers(graph, params.k)

    labels = np.full(data.n, -1, dtype=np.int64)
    labels[centers] = np.arange(params.k)
    for point in graph.order:
        if labels[point] < 0:
            labels[point] = labels[graph.parent[point]]

    logger.debug("DP d_c=%g k=%d: centers=%s", params.d_c, params.k, centers.tolist())
    return ClusteringResult(assignments=labels, k=params.k)
