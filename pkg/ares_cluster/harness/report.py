"""Result tables as CSV or markdown, and histogram data for plotting."""

from __future__ import annotations

import logging
from enum import StrEnum
from pathlib import Path
from typing import TYPE_CHECKING

import numpy as np
import pandas as pd

from ares_cluster.data.columns import find_column
from ares_cluster.errors import DatasetError, ParameterError
from ares_cluster.harness.models import Algorithm, TransformMethod
from ares_cluster.transform.models import ScalingKind

if TYPE_CHECKING:
    from os import PathLike

    from ares_cluster.data.models import Dataset
    from ares_cluster.harness.models import GridPoint, ResultRow, ResultTable

logger = logging.getLogger(__name__)

F1_FORMAT = "{:.4f}"
ERROR_CELL = "error"
CSV_COLUMNS = (
    "dataset",
    "algorithm",
    "transform",
    "scaling",
    "best_f1",
    "best_params",
    "evaluated",
    "runtime_s",
    "error",
)


class ReportFormat(StrEnum):
    CSV = "csv"
    MARKDOWN = "markdown"


class PivotAxis(StrEnum):
    """Which dimension becomes the markdown columns."""

    TRANSFORM = "transform"
    SCALING = "scaling"


def format_f1(value: float | None) -> str:
    return ERROR_CELL if value is None else F1_FORMAT.format(value)


def format_params(params: GridPoint) -> str:
    return ";".join(f"{name}={value:g}" for name, value in params.items())


def _csv_frame(table: ResultTable) -> pd.DataFrame:
    records = [
        {
            "dataset": row.dataset,
            "algorithm": row.algorithm.value,
            "transform": row.transform.value,
            "scaling": row.scaling.value,
            "best_f1": format_f1(row.best_f1),
            "best_params": format_params(row.best_params),
            "evaluated": row.evaluated,
            "runtime_s": f"{row.runtime:.3f}",
            "error": row.error or "",
        }
        for row in table.rows
    ]
    return pd.DataFrame.from_records(records, columns=list(CSV_COLUMNS))


def _markdown_table(header: list[str], body: list[list[str]]) -> list[str]:
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join("---" for _ in header) + "|",
    ]
    lines.extend("| " + " | ".join(cells) + " |" for cells in body)
    return lines


def render_markdown(table: ResultTable, pivot: PivotAxis = PivotAxis.TRANSFORM) -> str:
    """One pivot table per algorithm; the best F1 of each row is bolded.

    With ``pivot=transform`` rows are (dataset, scaling) and columns are
    transforms; with ``pivot=scaling`` rows are (dataset, transform).
    """
    axis: type[TransformMethod] | type[ScalingKind]
    if pivot is PivotAxis.TRANSFORM:
        axis, row_label = TransformMethod, "scaling"
    else:
        axis, row_label = ScalingKind, "transform"

    def column_of(row: ResultRow) -> str:
        return row.transform.value if pivot is PivotAxis.TRANSFORM else row.scaling.value

    def row_of(row: ResultRow) -> str:
        return row.scaling.value if pivot is PivotAxis.TRANSFORM else row.transform.value

    sections: list[str] = []
    for algorithm in Algorithm:
        rows = [row for row in table.rows if row.algorithm is algorithm]
        if not rows:
            continue
        present = {column_of(row) for row in rows}
        columns = [member.value for member in axis if member.value in present]

        cells: dict[tuple[str, str], dict[str, ResultRow]] = {}
        for row in rows:
            cells.setdefault((row.dataset, row_of(row)), {})[column_of(row)] = row

        body: list[list[str]] = []
        for (dataset, label), by_column in cells.items():
            scores = [r.best_f1 for r in by_column.values() if r.best_f1 is not None]
            best = max(scores) if scores else None
            line = [dataset, label]
            for column in columns:
                result = by_column.get(column)
                if result is None:
                    line.append("")
                    continue
                text = format_f1(result.best_f1)
                if best is not None and result.best_f1 is not None and text == format_f1(best):
                    text = f"**{text}**"
                line.append(text)
            body.append(line)

        sections.append(f"### {algorithm.value}")
        sections.append("")
        sections.extend(_markdown_table(["dataset", row_label, *columns], body))
        sections.append("")
    return "\n".join(sections)


def emit_report(
    table: ResultTable,
    fmt: ReportFormat,
    path: str | PathLike[str],
    *,
    pivot: PivotAxis = PivotAxis.TRANSFORM,
) -> None:
    """Write *table* as CSV (one row per result, F1 to 4 decimals) or markdown pivots.

    Raises:
        DatasetError: the file cannot be written.
    """
    try:
        if fmt is ReportFormat.CSV:
            _csv_frame(table).to_csv(path, index=False)
        else:
            Path(path).write_text(render_markdown(table, pivot), encoding="utf-8")
    except OSError as exc:
        raise DatasetError(f"cannot write {path}: {exc}") from exc
    logger.info("Wrote %s report with %d rows to %s", fmt, len(table.rows), path)


def histogram(data: Dataset, feature: str, bins: int) -> pd.DataFrame:
    """Counts of the min-max normalized *feature* over ``bins`` equal bins of [0, 1]."""
    if bins < 1:
        raise ParameterError(f"bins must be positive, got {bins}")
    column = data.column(find_column(feature, data.columns))
    low, high = column.min(), column.max()
    span = high - low
    normalized = (column - low) / span if span > 0 else np.zeros_like(column)
    counts, edges = np.histogram(normalized, bins=bins, range=(0.0, 1.0))
    return pd.DataFrame({"bin_center": (edges[:-1] + edges[1:]) / 2, "count": counts})


def emit_histogram(
    data: Dataset,
    feature: str,
    bins: int,
    path: str | PathLike[str],
) -> None:
    """Write ``bin_center,count`` rows for *feature*, ready for external plotting.

    Raises:
        ColumnNotFoundError: *feature* is not a column of *data*.
        ParameterError: ``bins < 1``.
        DatasetError: the file cannot be written.
    """
    frame = histogram(data, feature, bins)
    try:
        frame.to_csv(path, index=False)
    except OSError as exc:
        raise DatasetError(f"cannot write {path}: {exc}") from exc
