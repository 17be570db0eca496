"""ARES rank-ensemble preprocessing and clustering benchmarks."""
