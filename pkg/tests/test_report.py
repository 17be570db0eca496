"""Tests for result reports and histogram data."""

from pathlib import Path

import numpy as np
import pandas as pd
import pytest

from ares_cluster.data.generators import generate_three_cluster_1d
from ares_cluster.data.models import Dataset
from ares_cluster.errors import ColumnNotFoundError, DatasetError, ParameterError
from ares_cluster.harness.models import Algorithm, ResultRow, ResultTable, TransformMethod
from ares_cluster.harness.report import (
    PivotAxis,
    ReportFormat,
    emit_histogram,
    emit_report,
    format_params,
    histogram,
    render_markdown,
)
from ares_cluster.transform.models import ScalingKind


def _row(
    transform: TransformMethod,
    f1: float | None,
    *,
    scaling: ScalingKind = ScalingKind.IDENTITY,
    algorithm: Algorithm = Algorithm.DP,
) -> ResultRow:
    return ResultRow(
        dataset="jain",
        transform=transform,
        scaling=scaling,
        algorithm=algorithm,
        best_params={"eps": 0.05} if f1 is not None else {},
        best_f1=f1,
        evaluated=50,
        error=None if f1 is not None else "psi=64 exceeds the 20 rows of the data",
    )


class TestCsvReport:
    def test_one_row(self, tmp_path: Path) -> None:
        path = tmp_path / "out.csv"
        table = ResultTable.from_rows([_row(TransformMethod.ARES, 1 / 3)])
        emit_report(table, ReportFormat.CSV, path)
        lines = path.read_text().splitlines()
        assert len(lines) == 2
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
        record = frame.iloc[0]
        assert record["best_f1"] == "0.3333"
        assert record["best_params"] == "eps=0.05"
        assert record["algorithm"] == "dp"
        assert record["error"] == ""

    def test_error_row(self, tmp_path: Path) -> None:
        path = tmp_path / "out.csv"
        table = ResultTable.from_rows([_row(TransformMethod.ARES, None)])
        emit_report(table, ReportFormat.CSV, path)
        record = pd.read_csv(path, dtype=str, keep_default_na=False).iloc[0]
        assert record["best_f1"] == "error"
        assert "psi=64" in record["error"]

    def test_unwritable(self, tmp_path: Path) -> None:
        with pytest.raises(DatasetError):
            emit_report(ResultTable(), ReportFormat.CSV, tmp_path / "missing" / "out.csv")


class TestFormatParams:
    def test_compact(self) -> None:
        assert format_params({"psi": 8, "t": 10, "eps": 0.05, "min_pts": 4}) == (
            "psi=8;t=10;eps=0.05;min_pts=4"
        )

    def test_empty(self) -> None:
        assert format_params({}) == ""


class TestMarkdown:
    def test_best_cell_bolded(self) -> None:
        table = ResultTable.from_rows(
            [
                _row(TransformMethod.MINMAX, 0.8607),
                _row(TransformMethod.ARES, 1.0),
                _row(TransformMethod.RANK, 0.9),
            ]
        )
        text = render_markdown(table)
        lines = text.splitlines()
        assert lines[0] == "### dp"
        assert lines[2] == "| dataset | scaling | minmax | ares | rank |"
        data_rows = [line for line in lines if line.startswith("| jain")]
        assert data_rows == ["| jain | identity | 0.8607 | **1.0000** | 0.9000 |"]

    def test_error_cell(self) -> None:
        table = ResultTable.from_rows(
            [_row(TransformMethod.MINMAX, 0.5), _row(TransformMethod.ARES, None)]
        )
        assert "| jain | identity | **0.5000** | error |" in render_markdown(table)

    def test_scaling_pivot(self) -> None:
        table = ResultTable.from_rows(
            [
                _row(TransformMethod.ARES, 1.0, scaling=ScalingKind.IDENTITY),
                _row(TransformMethod.ARES, 1.0, scaling=ScalingKind.LOG),
                _row(TransformMethod.ARES, 0.7, scaling=ScalingKind.INVERSE),
            ]
        )
        lines = render_markdown(table, PivotAxis.SCALING).splitlines()
        assert "| dataset | transform | identity | log | inverse |" in lines
        assert "| jain | ares | **1.0000** | **1.0000** | 0.7000 |" in lines

    def test_one_section_per_algorithm(self) -> None:
        table = ResultTable.from_rows(
            [
                _row(TransformMethod.ARES, 0.9, algorithm=Algorithm.KMEANS),
                _row(TransformMethod.ARES, 0.8, algorithm=Algorithm.DBSCAN),
            ]
        )
        headings = [line for line in render_markdown(table).splitlines() if line.startswith("###")]
        assert headings == ["### dbscan", "### kmeans"]

    def test_written_to_file(self, tmp_path: Path) -> None:
        path = tmp_path / "out.md"
        table = ResultTable.from_rows([_row(TransformMethod.RANK, 0.25)])
        emit_report(table, ReportFormat.MARKDOWN, path)
        assert path.read_text() == render_markdown(table)


class TestHistogram:
    def test_uniform_counts(self) -> None:
        data = Dataset.from_array(np.linspace(0.0, 1.0, 100))
        frame = histogram(data, "x0", 10)
        assert list(frame.columns) == ["bin_center", "count"]
        assert frame["count"].sum() == 100
        assert frame["count"].tolist() == [10] * 10
        assert frame["bin_center"].iloc[0] == pytest.approx(0.05)

    def test_constant_column(self) -> None:
        frame = histogram(Dataset.from_array([3.0] * 7), "x0", 5)
        assert frame["count"].tolist() == [7, 0, 0, 0, 0]

    def test_three_cluster_peaks(self) -> None:
        data, _ = generate_three_cluster_1d(0)
        counts = histogram(data, "x", 50)["count"].to_numpy()
        padded = np.concatenate([[0], counts, [0]])
        peaks = (padded[1:-1] > padded[:-2]) & (padded[1:-1] >= padded[2:])
        assert peaks.sum() >= 3

    def test_unknown_feature(self) -> None:
        with pytest.raises(ColumnNotFoundError, match="x9"):
            histogram(Dataset.from_array([1.0, 2.0]), "x9", 5)

    def test_zero_bins(self) -> None:
        with pytest.raises(ParameterError):
            histogram(Dataset.from_array([1.0, 2.0]), "x0", 0)

    def test_emit(self, tmp_path: Path) -> None:
        path = tmp_path / "hist.csv"
        emit_histogram(Dataset.from_array([0.0, 1.0]), "x0", 2, path)
        assert path.read_text().splitlines() == ["bin_center,count", "0.25,1", "0.75,1"]
