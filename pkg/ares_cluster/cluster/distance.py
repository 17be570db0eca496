"""Euclidean distances, computed in row blocks to bound memory."""

from __future__ import annotations

from collections.abc import Iterator

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.spatial.distance import cdist

from ares_cluster.config import settings
from ares_cluster.errors import DimensionMismatchError


def pairwise_distance(a: ArrayLike, b: ArrayLike) -> float:
    """Euclidean distance between two points.

    Uses the same kernel as :func:`distance_blocks`, so results agree bit for bit.
    """
    left = np.atleast_1d(np.asarray(a, dtype=np.float64))
    right = np.atleast_1d(np.asarray(b, dtype=np.float64))
    if left.shape != right.shape:
        raise DimensionMismatchError(left.size, right.size)
    return float(cdist(left[None, :], right[None, :])[0, 0])


def distance_blocks(
    values: NDArray[np.float64],
    block_size: int | None = None,
) -> Iterator[tuple[int, NDArray[np.float64]]]:
    """Yield ``(start, D)`` where ``D[r, j]`` is the distance from row ``start + r`` to row j."""
    size = block_size or settings.distance_block_size
    for start in range(0, values.shape[0], size):
        yield start, cdist(values[start : start + size], values)
