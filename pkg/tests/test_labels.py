"""Tests for label canonicalization and clustering files."""

from pathlib import Path

import numpy as np
import pytest

from ares_cluster.cluster.labels import load_clustering, relabel_canonical, save_clustering
from ares_cluster.cluster.models import NOISE, ClusteringResult
from ares_cluster.errors import DatasetError


def _result(assignments: list[int], k: int) -> ClusteringResult:
    return ClusteringResult(assignments=np.array(assignments), k=k)


class TestRelabelCanonical:
    @pytest.mark.parametrize(
        ("assignments", "k", "expected"),
        [
            ([2, 2, 0, 1], 3, [0, 0, 1, 2]),
            ([NOISE, 1, 1], 2, [NOISE, 0, 0]),
            ([0, 1, 2], 3, [0, 1, 2]),
        ],
    )
    def test_examples(self, assignments: list[int], k: int, expected: list[int]) -> None:
        assert relabel_canonical(_result(assignments, k)).assignments.tolist() == expected

    def test_idempotent(self) -> None:
        rng = np.random.default_rng(0)
        for _ in range(20):
            raw = rng.integers(-1, 5, size=15)
            once = relabel_canonical(ClusteringResult(assignments=raw, k=5))
            twice = relabel_canonical(once)
            assert np.array_equal(once.assignments, twice.assignments)

    def test_partition_preserved(self) -> None:
        result = _result([3, NOISE, 0, 3, 1], 4)
        assert relabel_canonical(result).partition() == result.partition()

    def test_objective_kept(self) -> None:
        result = ClusteringResult(assignments=np.array([1, 0]), k=2, objective=2.5)
        assert relabel_canonical(result).objective == 2.5


class TestClusteringResult:
    def test_out_of_range_id_rejected(self) -> None:
        with pytest.raises(ValueError):
            _result([0, 2], 2)

    def test_noise_count(self) -> None:
        assert _result([NOISE, 0, NOISE], 1).noise_count == 2


class TestClusteringFile:
    def test_round_trip(self, tmp_path: Path) -> None:
        result = _result([1, NOISE, 0, 1], 2)
        path = tmp_path / "pred.csv"
        save_clustering(result, path)
        assert path.read_text().splitlines()[0] == "row_index,cluster_id"
        loaded = load_clustering(path)
        assert loaded.assignments.tolist() == [1, NOISE, 0, 1]
        assert loaded.k == 2

    def test_rows_reordered(self, tmp_path: Path) -> None:
        path = tmp_path / "pred.csv"
        path.write_text("row_index,cluster_id\n1,0\n0,1\n")
        assert load_clustering(path).assignments.tolist() == [1, 0]

    def test_missing_column(self, tmp_path: Path) -> None:
        path = tmp_path / "pred.csv"
        path.write_text("row,cluster\n0,0\n")
        with pytest.raises(DatasetError, match="lacks columns"):
            load_clustering(path)

    def test_gap_in_rows(self, tmp_path: Path) -> None:
        path = tmp_path / "pred.csv"
        path.write_text("row_index,cluster_id\n0,0\n2,0\n")
        with pytest.raises(DatasetError, match="row_index"):
            load_clustering(path)

    def test_unwritable(self, tmp_path: Path) -> None:
        with pytest.raises(DatasetError):
            save_clustering(_result([0], 1), tmp_path / "missing" / "pred.csv")
