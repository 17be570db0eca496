from pathlib import Path

import pytest
from pydantic import ValidationError

from ares_cluster.config import Settings


def test_default_settings() -> None:
    s = Settings(_env_file=None)  # type: ignore[call-arg]
    assert s.data_dir == Path("data")
    assert s.log_level == "WARNING"
    assert s.max_workers == 1
    assert s.distance_block_size == 512
    assert s.fetch_timeout == 30.0
    assert s.fetch_retries == 2


def test_env_prefix(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("ARES_MAX_WORKERS", "4")
    monkeypatch.setenv("ARES_DATA_DIR", "/tmp/datasets")
    s = Settings(_env_file=None)  # type: ignore[call-arg]
    assert s.max_workers == 4
    assert s.data_dir == Path("/tmp/datasets")


def test_unknown_env_ignored(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("ARES_SOMETHING_ELSE", "1")
    s = Settings(_env_file=None)  # type: ignore[call-arg]
    assert not hasattr(s, "something_else")


@pytest.mark.parametrize("name", ["ARES_MAX_WORKERS", "ARES_DISTANCE_BLOCK_SIZE"])
def test_non_positive_sizes_rejected(monkeypatch: pytest.MonkeyPatch, name: str) -> None:
    monkeypatch.setenv(name, "0")
    with pytest.raises(ValidationError):
        Settings(_env_file=None)  # type: ignore[call-arg]
