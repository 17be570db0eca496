"""User-facing CLI text."""

PROG = "ares-cluster"
DESCRIPTION = (
    "ARES preprocessing, KMeans/DBSCAN/Density Peak clustering and F1 evaluation "
    "for robustness-to-representation experiments."
)

# Help
HELP_VERBOSE = "log at DEBUG level"
HELP_TRANSFORM = "transform a dataset with min-max, rank or ARES"
HELP_CLUSTER = "cluster a dataset"
HELP_EVAL = "score a clustering against ground-truth labels"
HELP_EXPERIMENT = "run a transform × scaling × algorithm sweep"
HELP_HIST = "write histogram data of one feature"
HELP_GENERATE = "write a synthetic dataset"
HELP_FETCH = "download public benchmark datasets"
HELP_LABEL_COLUMN = "name of the class column (CSV input)"

# Results
TRANSFORM_DONE = "Wrote {n} × {d} {method} output to {path}"
CLUSTER_DONE = "Wrote {k} clusters ({noise} noise points) to {path}"
EVAL_RESULT = "{f1:.4f}"
EXPERIMENT_DONE = "Wrote {rows} results ({errors} failed) to {path}"
HIST_DONE = "Wrote {bins} bins of {feature!r} to {path}"
GENERATE_DONE = "Wrote {n} rows to {path}"
FETCH_DONE = "Fetched {name} -> {path}"

# Errors
ERROR_PREFIX = "error: "
TRUTH_WITHOUT_LABELS = "{path} has no class labels; pass --label-column"
UNEXPECTED_ERROR = "unexpected {kind}: {message}"
