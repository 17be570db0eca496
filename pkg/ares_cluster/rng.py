"""Seedable, platform-portable random streams.

Every consumer derives its own stream from the user seed plus a spawn key, so
adding or reordering consumers never shifts another consumer's draws:

- ARES shared row sampling, ensemble member j: key ``(0, j)``
- ARES per-feature sampling, feature i, member j: key ``(1 + i, j)``
- KMeans at grid point g: seed ``derive_seed(seed, 2, g)``, restart r: key ``(r,)``
"""

from __future__ import annotations

import numpy as np

SHARED_STREAM = 0
FEATURE_STREAM_OFFSET = 1
KMEANS_STREAM = 2


def child_generator(seed: int, *key: int) -> np.random.Generator:
    """Return a PCG64 generator for ``(seed, key)``."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=key)))


def derive_seed(seed: int, *key: int) -> int:
    """Derive an independent 32-bit seed for ``(seed, key)``."""
    state = np.random.SeedSequence(seed, spawn_key=key).generate_state(1)
    return int(state[0])
