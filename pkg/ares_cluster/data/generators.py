"""Synthetic datasets for examples and tests."""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray
from scipy.stats import truncnorm

from ares_cluster.data.models import Dataset, LabelVector
from ares_cluster.errors import ParameterError
from ares_cluster.rng import child_generator

# Two narrow, dense components on the left and one wide, sparse one on the right.
THREE_CLUSTER_COMPONENTS: tuple[tuple[float, float], ...] = ((2.0, 0.12), (3.0, 0.12), (6.0, 0.6))


def generate_three_cluster_1d(
    seed: int,
    n_per_cluster: tuple[int, int, int] = (100, 100, 50),
) -> tuple[Dataset, LabelVector]:
    """One-dimensional mixture of three Gaussians with varying densities.

    Components are truncated at zero, so every value is strictly positive and
    the log and inverse scalings stay finite.
    """
    if len(n_per_cluster) != 3 or any(count < 1 for count in n_per_cluster):
        raise ParameterError(f"need three positive cluster sizes, got {n_per_cluster}")
    rng = child_generator(seed)
    parts = []
    labels = []
    for label, ((mean, std), count) in enumerate(
        zip(THREE_CLUSTER_COMPONENTS, n_per_cluster, strict=True)
    ):
        lower = (0.0 - mean) / std
        sample = truncnorm.rvs(lower, np.inf, loc=mean, scale=std, size=count, random_state=rng)
        parts.append(sample)
        labels.extend([label] * count)
    values = np.concatenate(parts)
    return Dataset.build(["x"], values.reshape(-1, 1)), LabelVector.build(labels)


def generate_blobs(
    seed: int,
    k: int,
    n_per_blob: int,
    d: int,
    separation: float,
    *,
    cluster_std: float = 0.5,
) -> tuple[Dataset, LabelVector]:
    """Isotropic Gaussian blobs with centers at least *separation* apart.

    Center ``i`` sits at ``(i + 1) · separation`` on the first axis, with the
    other coordinates uniform in ``[separation, 2 · separation)``, so every
    pair differs by at least *separation* along the first axis and all
    values stay positive for ``cluster_std ≪ separation``.
    """
    if k < 1 or n_per_blob < 1 or d < 1:
        raise ParameterError(f"k, n_per_blob and d must be positive, got {k}, {n_per_blob}, {d}")
    if separation <= 0 or cluster_std <= 0:
        raise ParameterError("separation and cluster_std must be positive")
    centers = blob_centers(seed, k, d, separation)
    rng = child_generator(seed, 1)
    points = [center + rng.normal(0.0, cluster_std, size=(n_per_blob, d)) for center in centers]
    labels = np.repeat(np.arange(k), n_per_blob)
    columns = [f"x{i}" for i in range(d)]
    return Dataset.build(columns, np.vstack(points)), LabelVector.build(labels)


def blob_centers(seed: int, k: int, d: int, separation: float) -> NDArray[np.float64]:
    """Centers used by :func:`generate_blobs` for the same arguments."""
    rng = child_generator(seed, 0)
    centers = rng.uniform(separation, 2 * separation, size=(k, d))
    centers[:, 0] = (np.arange(k) + 1) * separation
    return centers
