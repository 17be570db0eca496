"""Tests for Euclidean distances."""

import numpy as np
import pytest
from scipy.spatial.distance import cdist

from ares_cluster.cluster.distance import distance_blocks, pairwise_distance
from ares_cluster.errors import DimensionMismatchError


class TestPairwiseDistance:
    def test_three_four_five(self) -> None:
        assert pairwise_distance((0.0, 0.0), (3.0, 4.0)) == 5.0

    def test_identity(self) -> None:
        assert pairwise_distance((1.5, -2.0, 7.0), (1.5, -2.0, 7.0)) == 0.0

    def test_symmetric(self) -> None:
        rng = np.random.default_rng(0)
        for _ in range(20):
            a, b = rng.normal(size=(2, 4))
            assert pairwise_distance(a, b) == pairwise_distance(b, a)

    def test_scalars(self) -> None:
        assert pairwise_distance(2.0, -1.0) == 3.0

    def test_dimension_mismatch(self) -> None:
        with pytest.raises(DimensionMismatchError):
            pairwise_distance((0.0, 0.0), (1.0, 2.0, 3.0))


class TestDistanceBlocks:
    @pytest.mark.parametrize("block_size", [1, 3, 7, 100])
    def test_blocks_cover_full_matrix(self, block_size: int) -> None:
        rng = np.random.default_rng(1)
        values = rng.normal(size=(7, 2))
        stacked = np.vstack([block for _start, block in distance_blocks(values, block_size)])
        assert np.array_equal(stacked, cdist(values, values))

    def test_starts(self) -> None:
        values = np.zeros((7, 1))
        assert [start for start, _block in distance_blocks(values, 3)] == [0, 3, 6]

    def test_agrees_with_pairwise_distance(self) -> None:
        rng = np.random.default_rng(2)
        values = rng.normal(size=(5, 3))
        _start, block = next(distance_blocks(values, 5))
        assert block[1, 4] == pairwise_distance(values[1], values[4])
