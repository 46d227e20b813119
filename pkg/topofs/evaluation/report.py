# Evaluation report: one row per (method, classifier, cardinality) cell.

import logging
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from ..utils import write_csv, write_json

logger = logging.getLogger(__name__)

METRIC_NAMES = ("balanced_accuracy", "f1_paper", "f1_macro", "mcc")
CSV_COLUMNS = (
    "method", "classifier", "cardinality", "metric", "squared", "alpha", "theta",
    "cv_score", *METRIC_NAMES, "mcc_degenerate", "error",
)


@dataclass
class ReportRow:
    method: str
    classifier: str
    cardinality: int
    config: Optional[dict] = None
    cv_score: Optional[float] = None
    metrics: Dict[str, float] = field(default_factory=dict)
    mcc_degenerate: bool = False
    cv_trace: List[dict] = field(default_factory=list)
    error: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.error is not None

    @property
    def key(self) -> tuple:
        return self.method, self.classifier, self.cardinality

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "classifier": self.classifier,
            "cardinality": self.cardinality,
            "config": self.config,
            "cv_score": self.cv_score,
            "metrics": dict(self.metrics),
            "mcc_degenerate": self.mcc_degenerate,
            "cv_trace": self.cv_trace,
            "error": self.error,
        }

    def to_record(self) -> dict:
        config = self.config or {}
        record = {
            "method": self.method,
            "classifier": self.classifier,
            "cardinality": self.cardinality,
            "metric": config.get("metric"),
            "squared": config.get("squared"),
            "alpha": config.get("alpha"),
            "theta": config.get("theta"),
            "cv_score": self.cv_score,
            "mcc_degenerate": self.mcc_degenerate,
            "error": self.error,
        }
        for name in METRIC_NAMES:
            record[name] = self.metrics.get(name)
        return record


def _best(values: Dict):
    # Highest value; ties go to the smallest key.
    top = max(values.values())
    return min(k for k, v in values.items() if v == top)


def summarize_report(rows: List[ReportRow]) -> dict:
    """
    Cross-cardinality summary of the test balanced accuracy.

    Per (method, classifier): the best cardinality, the mean, the growth from the smallest
    to the largest cardinality and the spread between highest and lowest score.
    Per (classifier, cardinality): the winning methods, and per classifier how many
    cardinalities each method wins. Failed cells are left out.
    """
    scores: Dict[tuple, Dict[int, float]] = {}
    for row in rows:
        if row.failed:
            continue
        scores.setdefault((row.method, row.classifier), {})[row.cardinality] = row.metrics["balanced_accuracy"]

    by_method = []
    for (method, classifier), per_k in sorted(scores.items()):
        cardinalities = sorted(per_k)
        values = np.array([per_k[k] for k in cardinalities])
        by_method.append({
            "method": method,
            "classifier": classifier,
            "best_cardinality": _best(per_k),
            "best_balanced_accuracy": float(values.max()),
            "mean_balanced_accuracy": float(values.mean()),
            "growth": float(values[-1] - values[0]),
            "max_drawdown": float(values.max() - values.min()),
        })

    cells: Dict[tuple, Dict[str, float]] = {}
    for (method, classifier), per_k in scores.items():
        for k, value in per_k.items():
            cells.setdefault((classifier, k), {})[method] = value

    winners = []
    bests: Dict[str, Dict[str, int]] = {}
    for (classifier, k), per_method in sorted(cells.items()):
        top = max(per_method.values())
        methods = sorted(m for m, v in per_method.items() if v == top)
        winners.append({"classifier": classifier, "cardinality": k, "methods": methods, "balanced_accuracy": top})
        counts = bests.setdefault(classifier, {})
        for m in per_method:
            counts.setdefault(m, 0)
        for m in methods:
            counts[m] += 1

    return {"by_method": by_method, "winners": winners, "number_of_bests": bests}


@dataclass
class EvaluationReport:
    """Rows of an evaluation run with the provenance needed to reproduce it."""
    rows: List[ReportRow]
    provenance: dict
    ttests: List[dict] = field(default_factory=list)

    def row(self, method: str, classifier: str, cardinality: int) -> ReportRow:
        for row in self.rows:
            if row.key == (method, classifier, cardinality):
                return row
        raise KeyError((method, classifier, cardinality))

    def to_dict(self) -> dict:
        return {
            "provenance": self.provenance,
            "rows": [row.to_dict() for row in self.rows],
            "summary": summarize_report(self.rows),
            "ttests": self.ttests,
        }

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([row.to_record() for row in self.rows], columns=list(CSV_COLUMNS))

    def write(self, output_dir) -> tuple:
        json_path = os.path.join(output_dir, "report.json")
        csv_path = os.path.join(output_dir, "report.csv")
        write_json(json_path, self.to_dict())
        write_csv(csv_path, self.to_frame())
        logger.info("report written to %s and %s", json_path, csv_path)
        return json_path, csv_path
