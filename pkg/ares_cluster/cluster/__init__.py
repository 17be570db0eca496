"""KMeans, DBSCAN and Density Peak clustering over Euclidean distance."""

from ares_cluster.cluster.dbscan import dbscan_run
from ares_cluster.cluster.density_peak import dp_run
from ares_cluster.cluster.distance import pairwise_distance
from ares_cluster.cluster.kmeans import kmeans_run
from ares_cluster.cluster.labels import load_clustering, relabel_canonical, save_clustering
from ares_cluster.cluster.models import (
    NOISE,
    ClusteringResult,
    DbscanParams,
    DpParams,
    KMeansParams,
)

__all__ = [
    "NOISE",
    "ClusteringResult",
    "DbscanParams",
    "DpParams",
    "KMeansParams",
    "dbscan_run",
    "dp_run",
    "kmeans_run",
    "load_clustering",
    "pairwise_distance",
    "relabel_canonical",
    "save_clustering",
]
