"""Datasets: models, loaders, generators and downloads."""

from ares_cluster.data.columns import find_column, suggest_column
from ares_cluster.data.generators import generate_blobs, generate_three_cluster_1d
from ares_cluster.data.loaders import load_arff, load_csv, load_dataset, save_csv
from ares_cluster.data.models import Dataset, LabelVector

__all__ = [
    "Dataset",
    "LabelVector",
    "find_column",
    "generate_blobs",
    "generate_three_cluster_1d",
    "load_arff",
    "load_csv",
    "load_dataset",
    "save_csv",
    "suggest_column",
]
