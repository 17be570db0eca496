"""Tests for min-max normalization."""

import numpy as np
import pytest

from ares_cluster.data.models import Dataset
from ares_cluster.errors import DimensionMismatchError
from ares_cluster.transform.minmax import minmax_apply, minmax_fit, minmax_normalize


class TestMinMaxFit:
    def test_single_column(self) -> None:
        model = minmax_fit(Dataset.from_array([2.0, 4.0, 6.0]))
        assert model.mins.tolist() == [2.0]
        assert model.maxs.tolist() == [6.0]

    def test_constant_column(self) -> None:
        model = minmax_fit(Dataset.from_array([5.0, 5.0]))
        assert model.mins.tolist() == model.maxs.tolist() == [5.0]

    def test_columns_independent(self) -> None:
        model = minmax_fit(Dataset.from_array([[1.0, 10.0], [3.0, -2.0]]))
        assert model.mins.tolist() == [1.0, -2.0]
        assert model.maxs.tolist() == [3.0, 10.0]
        assert model.d == 2


class TestMinMaxApply:
    def test_endpoints(self) -> None:
        result = minmax_normalize(Dataset.from_array([2.0, 4.0, 6.0]))
        assert result.column(0).tolist() == [0.0, 0.5, 1.0]

    def test_constant_column_maps_to_zero(self) -> None:
        result = minmax_normalize(Dataset.from_array([5.0, 5.0]))
        assert result.column(0).tolist() == [0.0, 0.0]

    def test_fitted_model_applied_to_new_data(self) -> None:
        model = minmax_fit(Dataset.from_array([0.0, 10.0]))
        assert minmax_apply(model, Dataset.from_array([5.0])).column(0).tolist() == [0.5]

    def test_dimension_mismatch(self) -> None:
        model = minmax_fit(Dataset.from_array([0.0, 10.0]))
        with pytest.raises(DimensionMismatchError):
            minmax_apply(model, Dataset.from_array([[1.0, 2.0]]))

    def test_range(self) -> None:
        rng = np.random.default_rng(3)
        result = minmax_normalize(Dataset.from_array(rng.normal(size=(50, 3))))
        assert result.values.min() == 0.0
        assert result.values.max() == 1.0

    @pytest.mark.parametrize("a", [2.0, 0.5, 4.0])
    def test_power_of_two_scaling_is_bitwise_invariant(self, a: float) -> None:
        rng = np.random.default_rng(5)
        values = rng.uniform(-3, 7, size=(40, 2))
        base = minmax_normalize(Dataset.from_array(values))
        scaled = minmax_normalize(Dataset.from_array(a * values))
        assert np.array_equal(base.values, scaled.values)

    @pytest.mark.parametrize(("a", "b"), [(3.0, 1.5), (0.1, -20.0), (7.0, 1e3)])
    def test_affine_invariance(self, a: float, b: float) -> None:
        rng = np.random.default_rng(6)
        values = rng.uniform(-3, 7, size=(40, 2))
        base = minmax_normalize(Dataset.from_array(values))
        mapped = minmax_normalize(Dataset.from_array(a * values + b))
        np.testing.assert_allclose(mapped.values, base.values, atol=1e-12)
