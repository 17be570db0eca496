"""Command-line entry point."""

from __future__ import annotations

import argparse
import asyncio
import logging
import sys
from pathlib import Path
from typing import TYPE_CHECKING

from pydantic import ValidationError

from ares_cluster import messages as msg
from ares_cluster.cluster.dbscan import dbscan_run
from ares_cluster.cluster.density_peak import dp_run
from ares_cluster.cluster.kmeans import kmeans_run
from ares_cluster.cluster.labels import load_clustering, save_clustering
from ares_cluster.cluster.models import DbscanParams, DpParams, KMeansParams
from ares_cluster.config import settings
from ares_cluster.data.fetch import SOURCES, fetch_datasets
from ares_cluster.data.generators import generate_blobs, generate_three_cluster_1d
from ares_cluster.data.loaders import load_dataset, save_csv
from ares_cluster.errors import AresClusterError, ParameterError
from ares_cluster.evaluation.f1 import f1_measure
from ares_cluster.harness.config import load_experiment_config
from ares_cluster.harness.experiment import run_experiment
from ares_cluster.harness.models import Algorithm, TransformMethod
from ares_cluster.harness.report import PivotAxis, ReportFormat, emit_histogram, emit_report
from ares_cluster.transform.ares import ares_apply, ares_fit, load_ares_model, save_ares_model
from ares_cluster.transform.minmax import minmax_normalize
from ares_cluster.transform.models import AresParams, SamplingMode, ScalingKind, ScalingParams
from ares_cluster.transform.rank import rank_transform
from ares_cluster.transform.scaling import scale

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    from ares_cluster.cluster.models import ClusteringResult
    from ares_cluster.data.models import Dataset

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def _choices(enum: type[TransformMethod] | type[Algorithm] | type[ScalingKind]) -> list[str]:
    return [member.value for member in enum]


def _cmd_transform(args: argparse.Namespace) -> str:
    data, labels = load_dataset(args.input, args.label_column)
    data = scale(data, ScalingParams(kind=ScalingKind(args.scaling)))
    method = TransformMethod(args.method)

    result: Dataset
    if method is TransformMethod.MINMAX:
        result = minmax_normalize(data)
    elif method is TransformMethod.RANK:
        result = rank_transform(data)
    else:
        if args.model_in is not None:
            model = load_ares_model(args.model_in)
        else:
            if args.psi is None or args.t is None:
                raise ParameterError("ares needs --psi and --t (or --model-in)")
            params = AresParams(
                psi=args.psi,
                t=args.t,
                seed=args.seed,
                normalize_output=not args.raw,
                sampling=SamplingMode(args.sampling),
            )
            model = ares_fit(data, params)
        if args.model_out is not None:
            save_ares_model(model, args.model_out)
        result = ares_apply(model, data)

    save_csv(result, labels, args.output, label_column=args.label_column or "class")
    return msg.TRANSFORM_DONE.format(n=result.n, d=result.d, method=method, path=args.output)


def _cmd_cluster(args: argparse.Namespace) -> str:
    data, _labels = load_dataset(args.input, args.label_column)
    algorithm = Algorithm(args.algo)

    result: ClusteringResult
    if algorithm is Algorithm.DBSCAN:
        if args.eps is None or args.min_pts is None:
            raise ParameterError("dbscan needs --eps and --min-pts")
        result = dbscan_run(data, DbscanParams(eps=args.eps, min_pts=args.min_pts))
    elif algorithm is Algorithm.DP:
        if args.k is None or args.eps is None:
            raise ParameterError("dp needs --k and --eps")
        result = dp_run(data, DpParams(k=args.k, d_c=args.eps))
    else:
        if args.k is None:
            raise ParameterError("kmeans needs --k")
        result = kmeans_run(
            data,
            KMeansParams(k=args.k, seed=args.seed, restarts=args.restarts, max_iter=args.max_iter),
        )

    save_clustering(result, args.output)
    return msg.CLUSTER_DONE.format(k=result.k, noise=result.noise_count, path=args.output)


def _cmd_eval(args: argparse.Namespace) -> str:
    _data, truth = load_dataset(args.truth, args.label_column)
    if truth is None:
        raise ParameterError(msg.TRUTH_WITHOUT_LABELS.format(path=args.truth))
    pred = load_clustering(args.pred)
    return msg.EVAL_RESULT.format(f1=f1_measure(truth, pred))


def _cmd_experiment(args: argparse.Namespace) -> str:
    overrides = {
        "dataset": args.dataset,
        "label_column": args.label_column,
        "transforms": args.transforms,
        "scalings": args.scalings,
        "algorithms": args.algorithms,
        "seed": args.seed,
        "k": args.k,
    }
    config = load_experiment_config(args.config, overrides)
    table = run_experiment(config)
    emit_report(table, ReportFormat(args.format), args.output, pivot=PivotAxis(args.pivot))
    errors = sum(1 for row in table.rows if row.error is not None)
    return msg.EXPERIMENT_DONE.format(rows=len(table.rows), errors=errors, path=args.output)


def _cmd_hist(args: argparse.Namespace) -> str:
    data, _labels = load_dataset(args.input, args.label_column)
    emit_histogram(data, args.feature, args.bins, args.output)
    return msg.HIST_DONE.format(bins=args.bins, feature=args.feature, path=args.output)


def _cmd_generate(args: argparse.Namespace) -> str:
    if args.kind == "three-cluster":
        data, labels = generate_three_cluster_1d(args.seed)
    else:
        data, labels = generate_blobs(args.seed, args.k, args.n_per_blob, args.d, args.separation)
    save_csv(data, labels, args.output)
    return msg.GENERATE_DONE.format(n=data.n, path=args.output)


def _cmd_fetch(args: argparse.Namespace) -> str:
    paths = asyncio.run(fetch_datasets(args.names, args.dest))
    return "\n".join(
        msg.FETCH_DONE.format(name=name, path=path)
        for name, path in zip(args.names, paths, strict=True)
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=msg.PROG, description=msg.DESCRIPTION)
    parser.add_argument("-v", "--verbose", action="store_true", help=msg.HELP_VERBOSE)
    commands = parser.add_subparsers(dest="command", required=True)

    transform = commands.add_parser("transform", help=msg.HELP_TRANSFORM)
    transform.add_argument("--method", choices=_choices(TransformMethod), required=True)
    transform.add_argument("--psi", type=int)
    transform.add_argument("--t", type=int)
    transform.add_argument("--seed", type=int, default=0)
    transform.add_argument(
        "--scaling", choices=_choices(ScalingKind), default=ScalingKind.IDENTITY.value
    )
    transform.add_argument(
        "--sampling",
        choices=[mode.value for mode in SamplingMode],
        default=SamplingMode.SHARED.value,
    )
    transform.add_argument("--raw", action="store_true", help="ARES output in [0, psi]")
    transform.add_argument("--model-in", type=Path)
    transform.add_argument("--model-out", type=Path)
    transform.add_argument("--label-column", help=msg.HELP_LABEL_COLUMN)
    transform.add_argument("--in", dest="input", type=Path, required=True)
    transform.add_argument("--out", dest="output", type=Path, required=True)
    transform.set_defaults(handler=_cmd_transform)

    cluster = commands.add_parser("cluster", help=msg.HELP_CLUSTER)
    cluster.add_argument("--algo", choices=_choices(Algorithm), required=True)
    cluster.add_argument("--k", type=int)
    cluster.add_argument("--eps", type=float)
    cluster.add_argument("--min-pts", type=int)
    cluster.add_argument("--seed", type=int, default=0)
    cluster.add_argument("--restarts", type=int, default=10)
    cluster.add_argument("--max-iter", type=int, default=100)
    cluster.add_argument("--label-column", help=msg.HELP_LABEL_COLUMN)
    cluster.add_argument("--in", dest="input", type=Path, required=True)
    cluster.add_argument("--out", dest="output", type=Path, required=True)
    cluster.set_defaults(handler=_cmd_cluster)

    evaluate = commands.add_parser("eval", help=msg.HELP_EVAL)
    evaluate.add_argument("--truth", type=Path, required=True)
    evaluate.add_argument("--label-column", default="class", help=msg.HELP_LABEL_COLUMN)
    evaluate.add_argument("--pred", type=Path, required=True)
    evaluate.set_defaults(handler=_cmd_eval)

    experiment = commands.add_parser("experiment", help=msg.HELP_EXPERIMENT)
    experiment.add_argument("--config", type=Path)
    experiment.add_argument("--dataset", type=Path)
    experiment.add_argument("--label-column", help=msg.HELP_LABEL_COLUMN)
    experiment.add_argument("--transforms", help="comma-separated")
    experiment.add_argument("--scalings", help="comma-separated")
    experiment.add_argument("--algorithms", help="comma-separated")
    experiment.add_argument("--seed", type=int)
    experiment.add_argument("--k", type=int)
    experiment.add_argument("--out", dest="output", type=Path, required=True)
    experiment.add_argument(
        "--format", choices=[f.value for f in ReportFormat], default=ReportFormat.CSV.value
    )
    experiment.add_argument(
        "--pivot", choices=[p.value for p in PivotAxis], default=PivotAxis.TRANSFORM.value
    )
    experiment.set_defaults(handler=_cmd_experiment)

    hist = commands.add_parser("hist", help=msg.HELP_HIST)
    hist.add_argument("--feature", required=True)
    hist.add_argument("--bins", type=int, default=50)
    hist.add_argument("--label-column", help=msg.HELP_LABEL_COLUMN)
    hist.add_argument("--in", dest="input", type=Path, required=True)
    hist.add_argument("--out", dest="output", type=Path, required=True)
    hist.set_defaults(handler=_cmd_hist)

    generate = commands.add_parser("generate", help=msg.HELP_GENERATE)
    generate.add_argument("--kind", choices=["three-cluster", "blobs"], default="three-cluster")
    generate.add_argument("--seed", type=int, default=0)
    generate.add_argument("--k", type=int, default=3)
    generate.add_argument("--n-per-blob", type=int, default=100)
    generate.add_argument("--d", type=int, default=2)
    generate.add_argument("--separation", type=float, default=5.0)
    generate.add_argument("--out", dest="output", type=Path, required=True)
    generate.set_defaults(handler=_cmd_generate)

    fetch = commands.add_parser("fetch", help=msg.HELP_FETCH)
    fetch.add_argument("names", nargs="+", choices=sorted(SOURCES))
    fetch.add_argument("--dest", type=Path)
    fetch.set_defaults(handler=_cmd_fetch)

    return parser


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else settings.log_level.upper()
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def main(argv: Sequence[str] | None = None) -> int:
    """Run one subcommand; 0 on success, 1 on any error (2 for bad arguments)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    handler: Callable[[argparse.Namespace], str] = args.handler
    try:
        output = handler(args)
    except AresClusterError as exc:
        print(f"{msg.ERROR_PREFIX}{exc}", file=sys.stderr)
        return 1
    except ValidationError as exc:
        error = exc.errors()[0]
        where = ".".join(str(part) for part in error["loc"])
        print(f"{msg.ERROR_PREFIX}{where}: {error['msg']}", file=sys.stderr)
        return 1
    except Exception as exc:
        logger.debug("Unhandled error in %s", args.command, exc_info=True)
        message = msg.UNEXPECTED_ERROR.format(kind=type(exc).__name__, message=exc)
        print(f"{msg.ERROR_PREFIX}{message}", file=sys.stderr)
        return 1
    print(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
