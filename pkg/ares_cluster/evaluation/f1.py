"""Best-match F1 against ground truth."""

from __future__ import annotations

from typing import Self

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, model_validator
from sklearn.metrics.cluster import contingency_matrix

from ares_cluster._arrays import IntArray
from ares_cluster.cluster.models import ClusteringResult
from ares_cluster.data.models import LabelVector
from ares_cluster.errors import DimensionMismatchError


class ContingencyTable(BaseModel):
    """Class × cluster co-occurrence counts.

    Columns follow ascending cluster id, so all NOISE points form the first
    column when present.
    """

    counts: IntArray
    cluster_ids: IntArray

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @model_validator(mode="after")
    def _check_shape(self) -> Self:
        if self.counts.ndim != 2 or self.counts.shape[1] != self.cluster_ids.size:
            raise ValueError("counts must be classes × clusters")
        return self

    @property
    def class_sizes(self) -> NDArray[np.int64]:
        return self.counts.sum(axis=1)

    @property
    def cluster_sizes(self) -> NDArray[np.int64]:
        return self.counts.sum(axis=0)

    @property
    def n(self) -> int:
        return int(self.counts.sum())


def contingency(truth: LabelVector, pred: ClusteringResult) -> ContingencyTable:
    if truth.n != pred.n:
        raise DimensionMismatchError(truth.n, pred.n)
    counts = contingency_matrix(truth.labels, pred.assignments)
    return ContingencyTable(counts=counts, cluster_ids=np.unique(pred.assignments))


def f1_measure(truth: LabelVector, pred: ClusteringResult) -> float:
    """Class-size-weighted best-match F1.

    For each class, the best F1 against any single predicted cluster (NOISE
    counts as one cluster); 0/0 is 0.
    """
    table = contingency(truth, pred)
    counts = table.counts.astype(np.float64)
    class_sizes = counts.sum(axis=1, keepdims=True)
    cluster_sizes = counts.sum(axis=0, keepdims=True)
    precision = counts / cluster_sizes
    recall = counts / class_sizes
    total = precision + recall
    f1 = np.divide(2 * precision * recall, total, out=np.zeros_like(total), where=total > 0)
    score = float(np.sum(class_sizes.ravel() * f1.max(axis=1)) / table.n)
    return min(max(score, 0.0), 1.0)
