"""Tests for the async dataset downloader."""

from pathlib import Path
from unittest.mock import AsyncMock, patch

import httpx
import numpy as np
import pytest

from ares_cluster.data.fetch import SOURCES, DatasetFetcher, parse_source
from ares_cluster.data.loaders import load_csv
from ares_cluster.errors import FetchError, FetchNotFoundError, FetchRateLimitError, ParameterError

JAIN_TEXT = "0.85\t17.45\t2\n0.75\t15.6\t2\n3.3\t15.45\t1\n"


def _make_response(status_code: int = 200, text: str = "") -> httpx.Response:
    """Create a mock httpx.Response."""
    return httpx.Response(
        status_code=status_code,
        content=text.encode(),
        request=httpx.Request("GET", "https://example.org/data.txt"),
    )


class TestParseSource:
    def test_label_last_whitespace(self) -> None:
        data, labels = parse_source(SOURCES["jain"], [JAIN_TEXT])
        assert (data.n, data.d) == (3, 2)
        assert data.columns == ("f0", "f1")
        assert labels.labels.tolist() == [0, 0, 1]
        assert np.array_equal(data.column(0), [0.85, 0.75, 3.3])

    def test_label_first_concatenates_files(self) -> None:
        source = SOURCES["letters"]
        data, labels = parse_source(source, ["T,2,8\nI,5,12\n", "T,4,11\n"])
        assert (data.n, data.d) == (3, 2)
        assert labels.labels.tolist() == [0, 1, 0]

    def test_segment_header_skipped(self) -> None:
        header = "\n".join(f"header line {i}" for i in range(5))
        text = f"{header}\nBRICKFACE,140.0,125.0\nSKY,188.0,133.0\n"
        data, labels = parse_source(SOURCES["segment"], [text])
        assert (data.n, data.d) == (2, 2)
        assert labels.class_count == 2


class TestDatasetFetcher:
    async def test_get_text(self) -> None:
        async with DatasetFetcher(retries=0) as fetcher:
            mock = AsyncMock(return_value=_make_response(text="1,2,a\n"))
            with patch.object(fetcher._client, "request", mock):
                assert await fetcher.get_text("https://example.org/x") == "1,2,a\n"
            mock.assert_awaited_once_with("GET", "https://example.org/x")

    async def test_not_found(self) -> None:
        async with DatasetFetcher(retries=2) as fetcher:
            mock = AsyncMock(return_value=_make_response(404))
            with (
                patch.object(fetcher._client, "request", mock),
                pytest.raises(FetchNotFoundError),
            ):
                await fetcher.get_text("https://example.org/x")
            assert mock.await_count == 1

    async def test_retries_on_server_error(self) -> None:
        async with DatasetFetcher(retries=2) as fetcher:
            mock = AsyncMock(side_effect=[_make_response(503), _make_response(text="ok")])
            with (
                patch.object(fetcher._client, "request", mock),
                patch("ares_cluster.data.fetch.asyncio.sleep", new=AsyncMock()) as sleep,
            ):
                assert await fetcher.get_text("https://example.org/x") == "ok"
            assert mock.await_count == 2
            sleep.assert_awaited_once_with(1.0)

    async def test_gives_up_after_retries(self) -> None:
        async with DatasetFetcher(retries=1) as fetcher:
            mock = AsyncMock(return_value=_make_response(429))
            with (
                patch.object(fetcher._client, "request", mock),
                patch("ares_cluster.data.fetch.asyncio.sleep", new=AsyncMock()),
                pytest.raises(FetchRateLimitError) as exc_info,
            ):
                await fetcher.get_text("https://example.org/x")
            assert exc_info.value.status_code == 429
            assert mock.await_count == 2

    async def test_other_status(self) -> None:
        async with DatasetFetcher(retries=0) as fetcher:
            mock = AsyncMock(return_value=_make_response(403, "forbidden"))
            with patch.object(fetcher._client, "request", mock), pytest.raises(FetchError):
                await fetcher.get_text("https://example.org/x")

    async def test_transport_error(self) -> None:
        async with DatasetFetcher(retries=0) as fetcher:
            mock = AsyncMock(side_effect=httpx.ConnectError("refused"))
            with (
                patch.object(fetcher._client, "request", mock),
                pytest.raises(FetchError) as exc_info,
            ):
                await fetcher.get_text("https://example.org/x")
            assert exc_info.value.status_code == 0

    async def test_fetch_writes_csv(self, tmp_path: Path) -> None:
        async with DatasetFetcher(retries=0) as fetcher:
            mock = AsyncMock(return_value=_make_response(text=JAIN_TEXT))
            with patch.object(fetcher._client, "request", mock):
                path = await fetcher.fetch("jain", tmp_path / "data")
        assert path == tmp_path / "data" / "jain.csv"
        data, labels = load_csv(path, label_column="class")
        assert (data.n, data.d) == (3, 2)
        assert labels is not None
        assert labels.class_count == 2

    async def test_unknown_dataset(self, tmp_path: Path) -> None:
        async with DatasetFetcher() as fetcher:
            with pytest.raises(ParameterError, match="unknown dataset"):
                await fetcher.fetch("iris", tmp_path)

    @pytest.mark.parametrize("name", ["hba", "gtzan"])
    async def test_unhosted_dataset(self, name: str, tmp_path: Path) -> None:
        async with DatasetFetcher() as fetcher:
            with pytest.raises(FetchError, match=name):
                await fetcher.fetch(name, tmp_path)
