"""Pydantic-compatible numpy array field types.

Arrays are copied on validation and frozen, and serialize to nested lists.
"""

from __future__ import annotations

from typing import Annotated, Any

import numpy as np
from numpy.typing import NDArray
from pydantic import PlainSerializer, PlainValidator


def _frozen(value: Any, dtype: type[np.generic]) -> NDArray[Any]:
    array = np.array(value, dtype=dtype)
    array.flags.writeable = False
    return array


def _to_float(value: Any) -> NDArray[np.float64]:
    return _frozen(value, np.float64)


def _to_int(value: Any) -> NDArray[np.int64]:
    return _frozen(value, np.int64)


def _to_list(value: NDArray[Any]) -> list[Any]:
    result: list[Any] = value.tolist()
    return result


FloatArray = Annotated[
    NDArray[np.float64],
    PlainValidator(_to_float),
    PlainSerializer(_to_list, return_type=list),
]
IntArray = Annotated[
    NDArray[np.int64],
    PlainValidator(_to_int),
    PlainSerializer(_to_list, return_type=list),
]
