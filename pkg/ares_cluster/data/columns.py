"""Column lookup with fuzzy suggestions, using rapidfuzz."""

from __future__ import annotations

from collections.abc import Sequence

from rapidfuzz import fuzz, process
from rapidfuzz import utils as rf_utils

from ares_cluster.errors import ColumnNotFoundError

SUGGESTION_THRESHOLD = 60


def suggest_column(name: str, columns: Sequence[str]) -> str | None:
    """Return the closest column name to *name*, or ``None``.

    Uses ``token_sort_ratio`` so ``"petal width"`` still finds ``"width_petal"``.
    """
    if not name or not columns:
        return None
    result = process.extractOne(
        name,
        list(columns),
        scorer=fuzz.token_sort_ratio,
        processor=rf_utils.default_process,
        score_cutoff=SUGGESTION_THRESHOLD,
    )
    if result is None:
        return None
    match, _score, _index = result
    return str(match)


def find_column(name: str, columns: Sequence[str]) -> int:
    """Return the index of *name* in *columns*.

    Raises:
        ColumnNotFoundError: no exact match; carries the closest name, if any.
    """
    try:
        return list(columns).index(name)
    except ValueError:
        raise ColumnNotFoundError(name, suggest_column(name, columns)) from None
