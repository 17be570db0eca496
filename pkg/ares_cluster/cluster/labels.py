"""Label canonicalization and clustering-result files."""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING

import numpy as np
import pandas as pd

from ares_cluster.cluster.models import NOISE, ClusteringResult
from ares_cluster.errors import DatasetError

if TYPE_CHECKING:
    from os import PathLike

ROW_COLUMN = "row_index"
CLUSTER_COLUMN = "cluster_id"


def relabel_canonical(result: ClusteringResult) -> ClusteringResult:
    """Renumber clusters by first appearance; NOISE stays NOISE."""
    mapping: dict[int, int] = {}
    relabeled = np.empty_like(result.assignments)
    for index, cluster in enumerate(result.assignments.tolist()):
        if cluster == NOISE:
            relabeled[index] = NOISE
        else:
            relabeled[index] = mapping.setdefault(cluster, len(mapping))
    return ClusteringResult(
        assignments=relabeled, k=max(result.k, len(mapping)), objective=result.objective
    )


def save_clustering(result: ClusteringResult, path: str | PathLike[str]) -> None:
    """One row per point: ``row_index, cluster_id`` with NOISE as −1."""
    frame = pd.DataFrame(
        {ROW_COLUMN: np.arange(result.n), CLUSTER_COLUMN: np.asarray(result.assignments)}
    )
    try:
        frame.to_csv(path, index=False)
    except OSError as exc:
        raise DatasetError(f"cannot write {path}: {exc}") from exc


def load_clustering(path: str | PathLike[str]) -> ClusteringResult:
    """Read a file written by :func:`save_clustering`."""
    path = Path(path)
    try:
        frame = pd.read_csv(path)
    except (OSError, pd.errors.EmptyDataError, pd.errors.ParserError) as exc:
        raise DatasetError(f"cannot read {path}: {exc}") from exc
    missing = {ROW_COLUMN, CLUSTER_COLUMN} - set(frame.columns)
    if missing:
        raise DatasetError(f"{path.name} lacks columns {sorted(missing)}")
    frame = frame.sort_values(ROW_COLUMN)
    if not np.array_equal(frame[ROW_COLUMN].to_numpy(), np.arange(len(frame))):
        raise DatasetError(f"{path.name}: row_index must cover 0..n-1 exactly once")
    assignments = frame[CLUSTER_COLUMN].to_numpy(dtype=np.int64)
    clustered = assignments[assignments != NOISE]
    k = int(clustered.max()) + 1 if clustered.size else 0
    try:
        return ClusteringResult(assignments=assignments, k=k)
    except ValueError as exc:
        raise DatasetError(f"invalid clustering in {path.name}: {exc}") from exc
