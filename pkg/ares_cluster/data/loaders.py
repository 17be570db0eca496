"""CSV and ARFF dataset loaders."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import TYPE_CHECKING

import numpy as np
import pandas as pd
from numpy.typing import NDArray
from scipy.io import arff

from ares_cluster.data.columns import find_column
from ares_cluster.data.models import Dataset, LabelVector
from ares_cluster.errors import DatasetError, UnsupportedFeatureError

if TYPE_CHECKING:
    from os import PathLike

logger = logging.getLogger(__name__)

# 17 significant digits reproduce every float64 exactly.
CSV_FLOAT_FORMAT = "%.17g"

_SUPPORTED_ARFF_TYPES = frozenset({"numeric", "nominal"})


def load_csv(
    path: str | PathLike[str],
    label_column: str | None = None,
) -> tuple[Dataset, LabelVector | None]:
    """Load a headered, comma-separated file of real numbers.

    The label column, if given, is removed from the features and remapped
    to ``0..k−1`` in order of first appearance.

    Raises:
        DatasetError: empty file, unparseable or non-finite cell (names the
            row and column), or missing label column.
    """
    path = Path(path)
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True)
    except pd.errors.EmptyDataError as exc:
        raise DatasetError(f"empty file {path}") from exc
    except (OSError, pd.errors.ParserError) as exc:
        raise DatasetError(f"cannot read {path}: {exc}") from exc

    if frame.empty:
        raise DatasetError(f"no data rows in {path}")

    columns = [str(c) for c in frame.columns]
    labels: LabelVector | None = None
    if label_column is not None:
        label_index = find_column(label_column, columns)
        labels = LabelVector.from_raw(frame.iloc[:, label_index].str.strip().tolist())
        frame = frame.drop(columns=frame.columns[label_index])
        columns.pop(label_index)

    values = _parse_numeric(frame, columns)
    dataset = Dataset.build(columns, values)
    logger.info(
        "Loaded %s: n=%d d=%d classes=%s",
        path.name,
        dataset.n,
        dataset.d,
        labels.class_count if labels is not None else "-",
    )
    return dataset, labels


def _parse_numeric(frame: pd.DataFrame, columns: list[str]) -> NDArray[np.float64]:
    """Convert string cells to float64, reporting the first bad cell."""
    if not columns:
        raise DatasetError("no feature columns")
    values = np.empty(frame.shape, dtype=np.float64)
    for j, name in enumerate(columns):
        raw = frame.iloc[:, j]
        parsed = pd.to_numeric(raw, errors="coerce")
        invalid = parsed.isna().to_numpy()
        if invalid.any():
            row = int(np.argmax(invalid))
            raise DatasetError(f"cannot parse {raw.iloc[row]!r} as a number", row=row, column=name)
        column = parsed.to_numpy(dtype=np.float64)
        infinite = ~np.isfinite(column)
        if infinite.any():
            row = int(np.argmax(infinite))
            raise DatasetError(f"non-finite value {raw.iloc[row]!r}", row=row, column=name)
        values[:, j] = column
    return values


def load_arff(
    path: str | PathLike[str],
    label_column: str | None = None,
) -> tuple[Dataset, LabelVector | None]:
    """Load an ARFF file with numeric attributes and at most one nominal class.

    Nominal classes map to ``0..k−1`` in declaration order. A *label_column*,
    if given, must name that nominal attribute.

    Raises:
        ColumnNotFoundError: *label_column* is not the nominal attribute.
        UnsupportedFeatureError: string, date or relational attributes, or
            more than one nominal attribute.
        DatasetError: malformed header or data, missing values.
    """
    path = Path(path)
    try:
        records, meta = arff.loadarff(path)
    except NotImplementedError as exc:
        raise UnsupportedFeatureError(f"{path.name}: {exc}") from exc
    except (arff.ArffError, ValueError, IndexError) as exc:
        raise DatasetError(f"malformed ARFF file {path.name}: {exc}") from exc
    except OSError as exc:
        raise DatasetError(f"cannot read {path}: {exc}") from exc

    names = list(meta.names())
    types = list(meta.types())
    for name, kind in zip(names, types, strict=True):
        if kind not in _SUPPORTED_ARFF_TYPES:
            raise UnsupportedFeatureError(f"{kind} attributes are not supported", column=name)
    nominal = [name for name, kind in zip(names, types, strict=True) if kind == "nominal"]
    if len(nominal) > 1:
        raise UnsupportedFeatureError(
            f"at most one nominal (class) attribute is supported, found {len(nominal)}"
        )
    if len(records) == 0:
        raise DatasetError(f"no data rows in {path}")
    if label_column is not None:
        find_column(label_column, nominal)

    labels: LabelVector | None = None
    if nominal:
        class_name = nominal[0]
        declared = [str(v) for v in meta[class_name][1]]
        codes = {value: code for code, value in enumerate(declared)}
        raw = [_decode(v) for v in records[class_name]]
        for row, value in enumerate(raw):
            if value not in codes:
                raise DatasetError(f"undeclared class value {value!r}", row=row, column=class_name)
        labels = _declared_labels([codes[v] for v in raw])

    features = [name for name in names if name not in nominal]
    if not features:
        raise DatasetError(f"{path.name} has no numeric attributes")
    values = np.column_stack([np.asarray(records[name], dtype=np.float64) for name in features])
    missing = np.argwhere(~np.isfinite(values))
    if missing.size:
        row, col = (int(v) for v in missing[0])
        raise DatasetError("missing or non-finite value", row=row, column=features[col])

    dataset = Dataset.build(features, values)
    logger.info("Loaded %s: n=%d d=%d", path.name, dataset.n, dataset.d)
    return dataset, labels


def _decode(value: object) -> str:
    if isinstance(value, bytes):
        return value.decode("utf-8")
    return str(value)


def _declared_labels(codes: list[int]) -> LabelVector:
    """Declaration-order codes, compacted if some declared values never occur."""
    present = sorted(set(codes))
    compact = {code: i for i, code in enumerate(present)}
    return LabelVector.build([compact[c] for c in codes])


def load_dataset(
    path: str | PathLike[str],
    label_column: str | None = None,
) -> tuple[Dataset, LabelVector | None]:
    """Load by suffix: ``.arff`` via :func:`load_arff`, anything else as CSV."""
    if Path(path).suffix.lower() == ".arff":
        return load_arff(path, label_column)
    return load_csv(path, label_column)


def save_csv(
    data: Dataset,
    labels: LabelVector | None,
    path: str | PathLike[str],
    *,
    label_column: str = "class",
) -> None:
    """Write *data* (and *labels* as the last column) so that load_csv reproduces it.

    Raises:
        DatasetError: label count differs from the row count, a feature is
            already named *label_column*, or the file cannot be written.
    """
    frame = pd.DataFrame(np.asarray(data.values), columns=list(data.columns))
    if labels is not None:
        if labels.n != data.n:
            raise DatasetError(f"{labels.n} labels for {data.n} rows")
        if label_column in data.columns:
            raise DatasetError(f"feature {label_column!r} clashes with the label column")
        frame[label_column] = np.asarray(labels.labels)
    try:
        frame.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT)
    except OSError as exc:
        raise DatasetError(f"cannot write {path}: {exc}") from exc
