"""Traditional rank transformation over the whole column."""

from __future__ import annotations

import numpy as np

from ares_cluster.data.models import Dataset


def rank_transform(data: Dataset) -> Dataset:
    """Replace each value by ``|{y in column: y < x}| / (n − 1)``.

    Ties share the rank of their first occurrence; a single-row dataset maps to 0.
    """
    values = data.values
    n = data.n
    ranks = np.empty_like(values)
    for i in range(data.d):
        column = values[:, i]
        ranks[:, i] = np.searchsorted(np.sort(column), column, side="left")
    if n > 1:
        ranks /= n - 1
    else:
        ranks[:] = 0.0
    return data.with_values(ranks)
