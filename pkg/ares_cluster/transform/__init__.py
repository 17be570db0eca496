"""Preprocessing transforms: min-max, rank, ARES and non-linear scalings."""

from ares_cluster.transform.ares import (
    ares_apply,
    ares_fit,
    ares_rank_totals,
    ares_transform,
    ares_transform_by_index,
    load_ares_model,
    save_ares_model,
)
from ares_cluster.transform.minmax import minmax_apply, minmax_fit, minmax_normalize
from ares_cluster.transform.models import (
    AresModel,
    AresParams,
    MinMaxModel,
    SamplingMode,
    ScalingKind,
    ScalingParams,
)
from ares_cluster.transform.rank import rank_transform
from ares_cluster.transform.scaling import scale

__all__ = [
    "AresModel",
    "AresParams",
    "MinMaxModel",
    "SamplingMode",
    "ScalingKind",
    "ScalingParams",
    "ares_apply",
    "ares_fit",
    "ares_rank_totals",
    "ares_transform",
    "ares_transform_by_index",
    "load_ares_model",
    "minmax_apply",
    "minmax_fit",
    "minmax_normalize",
    "rank_transform",
    "save_ares_model",
    "scale",
]
