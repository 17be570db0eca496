"""Experiment harness: grid search, sweeps and reports."""

from ares_cluster.harness.config import load_experiment_config
from ares_cluster.harness.experiment import prepare, run_experiment
from ares_cluster.harness.grid import grid_search
from ares_cluster.harness.models import (
    Algorithm,
    ExperimentConfig,
    GridSearchResult,
    ParameterGrid,
    ResultRow,
    ResultTable,
    TransformMethod,
)
from ares_cluster.harness.report import (
    PivotAxis,
    ReportFormat,
    emit_histogram,
    emit_report,
    render_markdown,
)

__all__ = [
    "Algorithm",
    "ExperimentConfig",
    "GridSearchResult",
    "ParameterGrid",
    "PivotAxis",
    "ReportFormat",
    "ResultRow",
    "ResultTable",
    "TransformMethod",
    "emit_histogram",
    "emit_report",
    "grid_search",
    "load_experiment_config",
    "prepare",
    "render_markdown",
    "run_experiment",
]
