"""Shared fixtures."""

from pathlib import Path

import numpy as np
import pytest

from ares_cluster.data.generators import generate_blobs
from ares_cluster.data.loaders import save_csv
from ares_cluster.data.models import Dataset, LabelVector

TINY_CSV = "a,b,y\n1,2,0\n3,4,0\n5,6,1\n"


@pytest.fixture
def tiny_csv(tmp_path: Path) -> Path:
    path = tmp_path / "tiny.csv"
    path.write_text(TINY_CSV)
    return path


@pytest.fixture
def two_blobs() -> tuple[Dataset, LabelVector]:
    return generate_blobs(7, 2, 20, 2, 10.0)


@pytest.fixture
def two_groups() -> tuple[Dataset, LabelVector]:
    """Two groups of ten 1-D points, 0.01 apart, around 0.00 and 0.50."""
    values = np.concatenate([np.arange(10) * 0.01, 0.5 + np.arange(10) * 0.01])
    labels = np.repeat([0, 1], 10)
    return Dataset.from_array(values), LabelVector.build(labels)


@pytest.fixture
def blobs_csv(tmp_path: Path) -> Path:
    data, labels = generate_blobs(3, 3, 15, 2, 5.0)
    path = tmp_path / "blobs.csv"
    save_csv(data, labels, path)
    return path
