"""Acceptance checks on the Jain dataset, expected at ``data/jain.csv`` in the repository.

``ares-cluster fetch jain --dest data`` writes it there.
"""

from pathlib import Path

import pytest

from ares_cluster.harness.experiment import run_experiment
from ares_cluster.harness.models import Algorithm, ExperimentConfig, ResultTable, TransformMethod
from ares_cluster.transform.models import ScalingKind

JAIN = Path(__file__).resolve().parents[1] / "data" / "jain.csv"
SCALINGS = [ScalingKind.IDENTITY, ScalingKind.LOG, ScalingKind.INVERSE]

pytestmark = [
    pytest.mark.dataset,
    pytest.mark.slow,
    pytest.mark.skipif(not JAIN.exists(), reason=f"{JAIN} missing; run `ares-cluster fetch jain`"),
]


def _best(table: ResultTable, transform: TransformMethod, scaling: ScalingKind) -> float:
    row = table.find(transform=transform, scaling=scaling, algorithm=Algorithm.DP)
    assert row is not None
    assert row.error is None, row.error
    assert row.best_f1 is not None
    return row.best_f1


@pytest.fixture(scope="module")
def jain_table() -> ResultTable:
    config = ExperimentConfig(
        dataset=JAIN,
        transforms=[TransformMethod.ARES, TransformMethod.MINMAX],
        scalings=SCALINGS,
        algorithms=[Algorithm.DP],
    )
    return run_experiment(config)


def test_shape(jain_table: ResultTable) -> None:
    assert len(jain_table.rows) == 2 * len(SCALINGS)
    assert {row.dataset for row in jain_table.rows} == {"jain"}


@pytest.mark.parametrize("scaling", SCALINGS)
def test_ares_perfect_under_every_scaling(jain_table: ResultTable, scaling: ScalingKind) -> None:
    assert _best(jain_table, TransformMethod.ARES, scaling) >= 0.995


def test_ares_inverse_within_tie_tolerance(jain_table: ResultTable) -> None:
    identity = _best(jain_table, TransformMethod.ARES, ScalingKind.IDENTITY)
    inverse = _best(jain_table, TransformMethod.ARES, ScalingKind.INVERSE)
    assert abs(identity - inverse) <= 0.02


def test_minmax_degrades_with_scaling(jain_table: ResultTable) -> None:
    identity, log, inverse = (_best(jain_table, TransformMethod.MINMAX, s) for s in SCALINGS)
    assert identity >= 0.995
    assert log == pytest.approx(0.8607, abs=0.08)
    assert inverse == pytest.approx(0.4241, abs=0.08)
    assert identity > log > inverse
