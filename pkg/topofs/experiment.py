"""Evaluation runs: configuration, orchestration and results."""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from .dataset import FeatureMatrix, load_csv, prune_constant_features, stratified_split
from .errors import TopoFSError, ValidationError
from .evaluation import (
    CLASSIFIERS,
    ClassifierSpec,
    EvaluationReport,
    Pipeline,
    ReportRow,
    all_metrics,
    default_grid,
    grid_search,
    paired_cv_ttest,
    predict_subset,
    rank_on,
)
from . import __version__
from .selection import METHODS
from .utils import read_json

logger = logging.getLogger(__name__)

DEFAULT_CARDINALITIES = (10, 50, 100, 150, 200)


@dataclass
class RunConfig:
    """Declarative description of an evaluation run."""

    dataset: str
    label_column: str
    test_fraction: float = 0.3
    methods: List[str] = field(default_factory=lambda: list(METHODS))
    cardinalities: List[int] = field(default_factory=lambda: list(DEFAULT_CARDINALITIES))
    classifiers: List[str] = field(default_factory=lambda: list(CLASSIFIERS))
    cv_k: int = 3
    seed: int = 0
    knn_k: int = 5
    output_dir: str = "results"
    grids: Dict[str, Dict[str, list]] = field(default_factory=dict)
    test_dataset: Optional[str] = None
    use_provided_split: bool = False
    ttest_repetitions: int = 0

    def __post_init__(self):
        if not 0.0 < self.test_fraction < 1.0:
            raise ValidationError(f"test_fraction must lie in (0, 1), got {self.test_fraction}")
        for method in self.methods:
            if method not in METHODS:
                raise ValidationError(f"unknown method {method!r}, expected one of {METHODS}")
        for kind in self.classifiers:
            if kind not in CLASSIFIERS:
                raise ValidationError(f"unknown classifier {kind!r}, expected one of {CLASSIFIERS}")
        if not self.methods or not self.classifiers or not self.cardinalities:
            raise ValidationError("methods, classifiers and cardinalities must not be empty")
        for k in self.cardinalities:
            if isinstance(k, bool) or int(k) != k or k < 1:
                raise ValidationError(f"cardinalities must be positive integers, got {k}")
        if self.cv_k < 2:
            raise ValidationError(f"cv_k must be at least 2, got {self.cv_k}")
        for method in self.grids:
            if method not in METHODS:
                raise ValidationError(f"grid given for unknown method {method!r}")
            # Builds every configuration once so bad grid values fail early.
            default_grid(method, self.grids[method])
        if self.use_provided_split and not self.test_dataset:
            raise ValidationError("use_provided_split needs a test_dataset")
        if self.ttest_repetitions and self.ttest_repetitions < 2:
            raise ValidationError(f"ttest_repetitions must be 0 or at least 2, got {self.ttest_repetitions}")

    @classmethod
    def paper_defaults(cls, dataset: str, label_column: str, **overrides: Any) -> "RunConfig":
        """Both methods, all classifiers, full grids, 70/30 split, 3-fold CV, seed 0."""
        return cls(dataset=dataset, label_column=label_column, **overrides)

    @classmethod
    def from_dict(cls, content: Dict[str, Any]) -> "RunConfig":
        known = set(cls.__dataclass_fields__)
        unknown = set(content) - known
        if unknown:
            raise ValidationError(f"unknown run options: {sorted(unknown)}")
        for required in ("dataset", "label_column"):
            if required not in content:
                raise ValidationError(f"run configuration lacks {required!r}")
        return cls(**content)

    @classmethod
    def from_json(cls, path) -> "RunConfig":
        return cls.from_dict(read_json(path))

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class RunResult:
    report: EvaluationReport
    json_path: Optional[str] = None
    csv_path: Optional[str] = None

    def summary(self) -> Dict[str, Any]:
        rows = self.report.rows
        return {
            "rows": len(rows),
            "failed": sum(row.failed for row in rows),
            "report": self.json_path,
        }


class Experiment:
    """Runs split, pruning, grid search, refit and test scoring for every cell of a RunConfig."""

    def __init__(self, config: RunConfig, n_jobs: int = 1, progress: bool = False, version: str = __version__):
        self.config = config
        self.n_jobs = n_jobs
        self.progress = progress
        self.version = version

    def load(self) -> tuple:
        """Returns ``(train, test)`` after splitting and pruning constant features."""
        config = self.config
        data = load_csv(config.dataset, config.label_column)
        if config.use_provided_split:
            train = data
            test = load_csv(config.test_dataset, config.label_column)
            logger.info("using the provided test set %s", config.test_dataset)
        else:
            split = stratified_split(data, config.test_fraction, config.seed)
            train = data.take_samples(split.train_indices)
            test = data.take_samples(split.test_indices)
        (train, test), _ = prune_constant_features(train, [test])
        return train, test

    def _cell(self, train: FeatureMatrix, test: FeatureMatrix, method: str, spec: ClassifierSpec,
              k: int, cv_rankings: dict, fit_rankings: dict) -> ReportRow:
        config = self.config
        row = ReportRow(method=method, classifier=spec.kind, cardinality=k)
        try:
            search = grid_search(
                train, method, spec, k,
                cv_k=config.cv_k,
                seed=config.seed,
                grid=default_grid(method, config.grids.get(method)),
                n_jobs=self.n_jobs,
                progress=self.progress,
                rankings=cv_rankings,
            )
            row.config = search.best.to_dict()
            row.cv_score = search.cv_score
            row.cv_trace = [
                {"config": entry["config"].to_dict(), "mean": entry["mean"],
                 "fold_scores": entry["fold_scores"], "error": entry["error"]}
                for entry in search.trace
            ]
            key = search.best.ranking_key()
            if key not in fit_rankings:
                fit_rankings[key] = rank_on(train, search.best)
            kept, ranking = fit_rankings[key]
            predictions = predict_subset(train, test, kept[ranking.top(k)], spec)
            metrics = all_metrics(test.require_labels(), predictions)
            row.mcc_degenerate = metrics.pop("mcc_degenerate")
            row.metrics = metrics
        except TopoFSError as exc:
            logger.warning("cell %s/%s/k=%d failed: %s", method, spec.kind, k, exc)
            row.error = str(exc)
        return row

    def _ttests(self, data: FeatureMatrix, rows: Sequence[ReportRow]) -> List[dict]:
        results = []
        by_key = {row.key: row for row in rows if not row.failed}
        for kind in self.config.classifiers:
            spec = ClassifierSpec(kind=kind, knn_k=self.config.knn_k, seed=self.config.seed)
            for k in self.config.cardinalities:
                a = by_key.get(("tfs", kind, k))
                b = by_key.get(("inffs", kind, k))
                if a is None or b is None:
                    continue
                pipeline_a = Pipeline.from_dict({**a.config, "classifier": spec.to_dict()})
                pipeline_b = Pipeline.from_dict({**b.config, "classifier": spec.to_dict()})
                try:
                    result = paired_cv_ttest(pipeline_a, pipeline_b, data,
                                             self.config.ttest_repetitions, self.config.seed)
                except TopoFSError as exc:
                    logger.warning("t-test %s/k=%d failed: %s", kind, k, exc)
                    results.append({"classifier": kind, "cardinality": k, "error": str(exc)})
                    continue
                results.append({"classifier": kind, "cardinality": k, "a": "tfs", "b": "inffs",
                                "error": None, **result.to_dict()})
        return results

    def run(self, write: bool = True) -> RunResult:
        config = self.config
        train, test = self.load()
        rows = []
        for method in config.methods:
            # Rankings depend on the method configuration and fold only, so every
            # classifier and cardinality of this method reuses them.
            cv_rankings: dict = {}
            fit_rankings: dict = {}
            for kind in config.classifiers:
                spec = ClassifierSpec(kind=kind, knn_k=config.knn_k, seed=config.seed)
                for k in config.cardinalities:
                    rows.append(self._cell(train, test, method, spec, k, cv_rankings, fit_rankings))

        ttests = []
        if config.ttest_repetitions:
            whole = FeatureMatrix(
                values=np.vstack([train.values, test.values]),
                feature_names=train.feature_names,
                labels=np.concatenate([train.labels, test.labels]),
            )
            ttests = self._ttests(whole, rows)

        report = EvaluationReport(
            rows=rows,
            provenance={"version": self.version, "config": config.to_dict(), "seed": config.seed},
            ttests=ttests,
        )
        result = RunResult(report=report)
        if write:
            result.json_path, result.csv_path = report.write(config.output_dir)
        failed = sum(row.failed for row in rows)
        if failed:
            logger.warning("%d of %d cells failed", failed, len(rows))
        return result
