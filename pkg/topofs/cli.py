"""Command line entry point ``tfs``.

Exit codes: 0 success, 1 input/output or numerical failure, 2 invalid configuration.
"""

import argparse
import dataclasses
import logging
import os
import sys
from typing import List, Optional

from . import __version__
from .dataset import load_csv, prune_constant_features
from .errors import DataError, NumericalError, ValidationError
from .evaluation import Pipeline, paired_cv_ttest
from .experiment import Experiment, RunConfig
from .selection import METHODS, FeatureRanking, SelectionConfig, TFSSelector, make_selector
from .similarity import METRICS, energy_matrix
from .tmfg import degree_centrality, degree_histogram, structural_checks
from .utils import read_json, write_json, write_similarity_csv

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
THREADS_ENV = "TFS_THREADS"
VALIDATE_ALPHA = 0.5


def resolve_threads(threads: Optional[int]) -> int:
    """``--threads``, else the TFS_THREADS environment variable, else 1."""
    if threads is None:
        raw = os.environ.get(THREADS_ENV)
        if raw is None or raw.strip() == "":
            return 1
        try:
            threads = int(raw)
        except ValueError:
            raise ValidationError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if threads < 1:
        raise ValidationError(f"threads must be at least 1, got {threads}")
    return threads


def _output_path(args, explicit: Optional[str], default_name: str) -> str:
    if explicit:
        return explicit
    return os.path.join(args.output_dir or ".", default_name)


def _provenance(command: str, args, config: dict) -> dict:
    return {"version": __version__, "command": command, "config": config, "seed": args.seed}


def _load_pruned(args) -> tuple:
    data = load_csv(args.input, args.label_col)
    (pruned,), kept = prune_constant_features(data)
    return data, pruned, kept


def cmd_select(args) -> int:
    config = SelectionConfig(
        method=args.method,
        metric=args.metric,
        squared=args.square,
        alpha=args.alpha,
        theta=args.theta,
        k=args.k,
    )
    if config.method == "inffs" and args.dump_graph:
        raise ValidationError("--dump-graph only applies to the tfs method")
    data, pruned, kept = _load_pruned(args)

    if config.method == "tfs":
        similarity, graph = TFSSelector.from_config(config).build_graph(pruned)
        ranking = FeatureRanking.from_scores(degree_centrality(graph))
        if args.dump_graph:
            write_json(args.dump_graph, {"feature_names": pruned.feature_names, "graph": graph.to_dict()})
    else:
        similarity = energy_matrix(pruned, config.alpha) if args.dump_similarity else None
        ranking = make_selector(config).rank(pruned)
    if args.dump_similarity:
        write_similarity_csv(args.dump_similarity, similarity.values, pruned.feature_names)

    selected = kept[ranking.top(config.k)]
    # Scores indexed by input column; pruned constant columns stay null.
    scores = [None] * data.n_features
    for position, column in enumerate(kept):
        scores[column] = float(ranking.scores[position])
    output = _output_path(args, args.output, "ranking.json")
    write_json(output, {
        "provenance": _provenance("select", args, {**config.to_dict(), "input": args.input,
                                                   "label_col": args.label_col}),
        "method": config.method,
        "config": config.to_dict(),
        "selected": selected.tolist(),
        "selected_names": [data.feature_names[i] for i in selected],
        "ranking": {
            "order": kept[ranking.order].tolist(),
            "scores": scores,
            "tie_rule": ranking.tie_rule,
        },
        "kept_features": kept.tolist(),
    })
    logger.info("selected %d features, written to %s", config.k, output)
    print(" ".join(data.feature_names[i] for i in selected))
    return 0


def cmd_build_graph(args) -> int:
    selector = TFSSelector(metric=args.metric, squared=args.square, alpha=args.alpha)
    _, pruned, kept = _load_pruned(args)
    similarity, graph = selector.build_graph(pruned)
    if args.dump_similarity:
        write_similarity_csv(args.dump_similarity, similarity.values, pruned.feature_names)
    output = _output_path(args, args.output, "graph.json")
    write_json(output, {
        "provenance": _provenance("build-graph", args, {**selector.config.to_dict(), "input": args.input,
                                                        "label_col": args.label_col}),
        "feature_names": pruned.feature_names,
        "kept_features": kept.tolist(),
        "graph": graph.to_dict(),
    })
    print(f"{graph.n} vertices, {graph.edge_count} edges written to {output}")
    return 0


def cmd_validate(args) -> int:
    _, pruned, _ = _load_pruned(args)
    alpha = VALIDATE_ALPHA if args.alpha is None else args.alpha
    passed = True
    for metric in METRICS:
        selector = TFSSelector(metric=metric, alpha=alpha if metric == "energy" else None)
        _, graph = selector.build_graph(pruned)
        print(f"[{metric}] n = {graph.n}, edges = {graph.edge_count}")
        for name, ok in structural_checks(graph).items():
            passed = passed and ok
            print(f"{name}: {'PASS' if ok else 'FAIL'}")
        histogram = degree_histogram(graph)
        print(f"degree histogram: {histogram}")
    return 0 if passed else 1


def cmd_evaluate(args) -> int:
    config = RunConfig.from_json(args.config)
    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.output_dir is not None:
        overrides["output_dir"] = args.output_dir
    if overrides:
        config = dataclasses.replace(config, **overrides)
    experiment = Experiment(config, n_jobs=resolve_threads(args.threads), progress=args.progress)
    result = experiment.run()
    summary = result.summary()
    print(f"{summary['rows']} rows ({summary['failed']} failed) written to {result.json_path}")
    return 0


def _load_pipeline(path) -> Pipeline:
    return Pipeline.from_dict(read_json(path))


def cmd_ttest(args) -> int:
    pipeline_a = _load_pipeline(args.a)
    pipeline_b = _load_pipeline(args.b)
    data = load_csv(args.input, args.label_col)
    seed = 0 if args.seed is None else args.seed
    result = paired_cv_ttest(pipeline_a, pipeline_b, data, repetitions=args.reps, seed=seed)
    output = _output_path(args, args.output, "ttest.json")
    write_json(output, {
        "provenance": _provenance("ttest", args, {"a": pipeline_a.to_dict(), "b": pipeline_b.to_dict(),
                                                  "input": args.input, "label_col": args.label_col,
                                                  "reps": args.reps}),
        "result": result.to_dict(),
    })
    flag = f" ({result.degenerate})" if result.degenerate else ""
    print(f"t = {result.t_statistic:.6g}, df = {result.degrees_of_freedom}, p = {result.p_value:.6g}{flag}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--output-dir", type=str, default=None)
    common.add_argument("--log-level", type=str, default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    common.add_argument("--progress", action="store_true")

    parser = argparse.ArgumentParser(prog="tfs", description="Topological feature selection.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    select = commands.add_parser("select", parents=[common], help="rank features and keep the top k")
    select.add_argument("--input", type=str, required=True)
    select.add_argument("--label-col", type=str, default=None)
    select.add_argument("--method", type=str, choices=METHODS, required=True)
    select.add_argument("--metric", type=str, choices=METRICS, default=None)
    select.add_argument("--square", action="store_true")
    select.add_argument("--alpha", type=float, default=None)
    select.add_argument("--theta", type=float, default=None)
    select.add_argument("--k", type=int, required=True)
    select.add_argument("--output", type=str, default=None)
    select.add_argument("--dump-similarity", type=str, default=None)
    select.add_argument("--dump-graph", type=str, default=None)
    select.set_defaults(func=cmd_select)

    graph = commands.add_parser("build-graph", parents=[common], help="build a TMFG and write it as JSON")
    graph.add_argument("--input", type=str, required=True)
    graph.add_argument("--label-col", type=str, default=None)
    graph.add_argument("--metric", type=str, choices=METRICS, default="pearson")
    graph.add_argument("--square", action="store_true")
    graph.add_argument("--alpha", type=float, default=None)
    graph.add_argument("--output", type=str, default=None)
    graph.add_argument("--dump-similarity", type=str, default=None)
    graph.set_defaults(func=cmd_build_graph)

    validate = commands.add_parser("validate", parents=[common], help="check TMFG invariants on a dataset")
    validate.add_argument("--input", type=str, required=True)
    validate.add_argument("--label-col", type=str, default=None)
    validate.add_argument("--alpha", type=float, default=None)
    validate.set_defaults(func=cmd_validate)

    evaluate = commands.add_parser("evaluate", parents=[common], help="run the evaluation protocol")
    evaluate.add_argument("--config", type=str, required=True)
    evaluate.set_defaults(func=cmd_evaluate)

    ttest = commands.add_parser("ttest", parents=[common], help="repeated two-fold paired t-test")
    ttest.add_argument("--a", type=str, required=True)
    ttest.add_argument("--b", type=str, required=True)
    ttest.add_argument("--input", type=str, required=True)
    ttest.add_argument("--label-col", type=str, required=True)
    ttest.add_argument("--reps", type=int, default=15)
    ttest.add_argument("--output", type=str, default=None)
    ttest.set_defaults(func=cmd_ttest)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level), format=LOG_FORMAT)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"tfs {args.command}: invalid configuration: {exc}", file=sys.stderr)
        return 2
    except (DataError, NumericalError, OSError) as exc:
        print(f"tfs {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
