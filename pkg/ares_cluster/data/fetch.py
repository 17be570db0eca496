"""Async downloader for the public benchmark datasets."""

from __future__ import annotations

import asyncio
import io
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import httpx
import numpy as np
import pandas as pd

from ares_cluster.config import settings
from ares_cluster.data.loaders import save_csv
from ares_cluster.data.models import Dataset, LabelVector
from ares_cluster.errors import (
    FetchError,
    FetchNotFoundError,
    FetchRateLimitError,
    ParameterError,
)

_UCI = "https://archive.ics.uci.edu/ml/machine-learning-databases"
_RETRY_BACKOFF = 1.0  # seconds, multiplied by attempt number

CLASS_COLUMN = "class"

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class DatasetSource:
    """Where a public dataset lives and how its raw files are laid out."""

    name: str
    urls: tuple[str, ...]
    sep: str = ","
    label_first: bool = False
    skiprows: int = 0
    note: str = ""


SOURCES: dict[str, DatasetSource] = {
    source.name: source
    for source in (
        DatasetSource("jain", ("http://cs.uef.fi/sipu/datasets/jain.txt",), sep=r"\s+"),
        DatasetSource("spambase", (f"{_UCI}/spambase/spambase.data",)),
        DatasetSource(
            "pendigits",
            (f"{_UCI}/pendigits/pendigits.tra", f"{_UCI}/pendigits/pendigits.tes"),
        ),
        DatasetSource(
            "letters",
            (f"{_UCI}/letter-recognition/letter-recognition.data",),
            label_first=True,
        ),
        DatasetSource(
            "satimage",
            (f"{_UCI}/statlog/satimage/sat.trn", f"{_UCI}/statlog/satimage/sat.tst"),
            sep=r"\s+",
        ),
        DatasetSource(
            "segment",
            (f"{_UCI}/image/segmentation.data", f"{_UCI}/image/segmentation.test"),
            label_first=True,
            skiprows=5,
        ),
        DatasetSource(
            "hba",
            (),
            note="no stable public mirror; export it to CSV with a 'class' column by hand",
        ),
        DatasetSource(
            "gtzan",
            (),
            note="distributed as audio; extract features to CSV with a 'class' column by hand",
        ),
    )
}


def _raise_for_status(response: httpx.Response) -> None:
    """Raise a typed exception for non-2xx responses."""
    if response.is_success:
        return

    code = response.status_code
    text = response.text[:200]

    if code == 404:
        raise FetchNotFoundError(code, f"{response.request.url} not found")
    if code == 429 or code >= 500:
        raise FetchRateLimitError(code, text)
    raise FetchError(code, text)


def parse_source(source: DatasetSource, texts: list[str]) -> tuple[Dataset, LabelVector]:
    """Turn the raw text files of *source* into one labelled dataset."""
    frames = [
        pd.read_csv(
            io.StringIO(text),
            sep=source.sep,
            header=None,
            skiprows=source.skiprows,
            engine="python",
        )
        for text in texts
    ]
    frame = pd.concat(frames, ignore_index=True).dropna(how="all")
    label_position = 0 if source.label_first else frame.shape[1] - 1
    raw_labels = frame.iloc[:, label_position].astype(str).str.strip().tolist()
    features = frame.drop(columns=frame.columns[label_position])
    values = features.to_numpy(dtype=np.float64)
    columns = [f"f{i}" for i in range(values.shape[1])]
    return Dataset.build(columns, values), LabelVector.from_raw(raw_labels)


class DatasetFetcher:
    """Async client that downloads and converts registered datasets."""

    def __init__(
        self,
        *,
        timeout: float | None = None,
        retries: int | None = None,
    ) -> None:
        self._retries = settings.fetch_retries if retries is None else retries
        self._client = httpx.AsyncClient(
            timeout=settings.fetch_timeout if timeout is None else timeout,
            follow_redirects=True,
        )

    async def _request(self, url: str) -> httpx.Response:
        """GET with retry on 429/5xx."""
        for attempt in range(self._retries + 1):
            try:
                response = await self._client.request("GET", url)
            except httpx.HTTPError as exc:
                raise FetchError(0, f"{url}: {exc}") from exc
            try:
                _raise_for_status(response)
            except FetchRateLimitError:
                if attempt < self._retries:
                    delay = _RETRY_BACKOFF * (attempt + 1)
                    logger.warning(
                        "Mirror busy (attempt %d/%d), retrying in %.1fs",
                        attempt + 1,
                        self._retries + 1,
                        delay,
                    )
                    await asyncio.sleep(delay)
                    continue
                raise
            return response
        raise RuntimeError("unreachable")

    async def close(self) -> None:
        await self._client.aclose()

    async def __aenter__(self) -> DatasetFetcher:
        return self

    async def __aexit__(self, *args: Any) -> None:
        await self.close()

    async def get_text(self, url: str) -> str:
        response = await self._request(url)
        return response.text

    async def fetch(self, name: str, dest_dir: Path) -> Path:
        """Download *name* and write ``<dest_dir>/<name>.csv``."""
        source = SOURCES.get(name)
        if source is None:
            known = ", ".join(sorted(SOURCES))
            raise ParameterError(f"unknown dataset {name!r}; known: {known}")
        if not source.urls:
            raise FetchError(0, f"{name}: {source.note}")

        texts = await asyncio.gather(*(self.get_text(url) for url in source.urls))
        data, labels = parse_source(source, list(texts))
        dest_dir.mkdir(parents=True, exist_ok=True)
        path = dest_dir / f"{name}.csv"
        save_csv(data, labels, path, label_column=CLASS_COLUMN)
        logger.info("Fetched %s: n=%d d=%d -> %s", name, data.n, data.d, path)
        return path


async def fetch_datasets(names: list[str], dest_dir: Path | None = None) -> list[Path]:
    """Download several datasets concurrently."""
    target = settings.data_dir if dest_dir is None else dest_dir
    async with DatasetFetcher() as fetcher:
        return list(await asyncio.gather(*(fetcher.fetch(name, target) for name in names)))
