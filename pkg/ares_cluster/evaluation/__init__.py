"""External validation of clusterings against ground truth."""

from ares_cluster.evaluation.f1 import ContingencyTable, contingency, f1_measure

__all__ = ["ContingencyTable", "contingency", "f1_measure"]
