"""Experiment configuration files: flat INI key/value pairs plus CLI overrides."""

from __future__ import annotations

import configparser
import logging
from pathlib import Path
from typing import TYPE_CHECKING, Any

from pydantic import ValidationError

from ares_cluster.errors import ConfigError
from ares_cluster.harness.models import ExperimentConfig

if TYPE_CHECKING:
    from collections.abc import Mapping
    from os import PathLike

SECTION = "experiment"

logger = logging.getLogger(__name__)


def read_ini(path: str | PathLike[str]) -> dict[str, str]:
    """Key/value pairs of the ``[experiment]`` section, or of a section-less file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc

    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str  # type: ignore[assignment,method-assign]
    try:
        if not text.lstrip().startswith("["):
            text = f"[{SECTION}]\n{text}"
        parser.read_string(text, source=str(path))
    except configparser.Error as exc:
        raise ConfigError(f"malformed config {path}: {exc.message}") from exc

    if not parser.has_section(SECTION):
        raise ConfigError(f"config {path} has no [{SECTION}] section")
    return dict(parser.items(SECTION))


def build_config(values: Mapping[str, Any]) -> ExperimentConfig:
    try:
        return ExperimentConfig.model_validate(dict(values))
    except ValidationError as exc:
        error = exc.errors()[0]
        where = ".".join(str(part) for part in error["loc"]) or "config"
        raise ConfigError(f"{where}: {error['msg']}") from exc


def load_experiment_config(
    path: str | PathLike[str] | None,
    overrides: Mapping[str, Any] | None = None,
) -> ExperimentConfig:
    """Read *path* (if given) and overlay non-``None`` *overrides*; overrides win.

    A relative ``dataset`` in the file resolves against the file's directory.

    Raises:
        ConfigError: unreadable file, unknown key or invalid value.
    """
    values: dict[str, Any] = {}
    if path is not None:
        values.update(read_ini(path))
        dataset = values.get("dataset")
        if dataset and not Path(dataset).is_absolute():
            values["dataset"] = str(Path(path).parent / dataset)
    if overrides:
        values.update({key: value for key, value in overrides.items() if value is not None})
    if "dataset" not in values:
        raise ConfigError("no dataset given")

    config = build_config(values)
    logger.debug("Experiment config: %s", config.model_dump_json())
    return config
