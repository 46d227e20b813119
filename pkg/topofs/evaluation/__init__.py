"""Classifiers, metrics, grid search, paired t-test and reports."""

from .classifiers import CLASSIFIERS, ClassifierSpec, fit_predict
from .grid_search import GridSearchResult, default_grid, grid_search
from .metrics import (
    ConfusionSummary,
    all_metrics,
    balanced_accuracy,
    confusion_summary,
    f1_scores,
    mcc,
    mcc_detail,
)
from .pipeline import Pipeline, predict_subset, rank_on, select_on
from .report import EvaluationReport, ReportRow, summarize_report
from .ttest import TTestResult, paired_cv_ttest, paired_ttest

__all__ = [
    "CLASSIFIERS",
    "ClassifierSpec",
    "ConfusionSummary",
    "EvaluationReport",
    "GridSearchResult",
    "Pipeline",
    "ReportRow",
    "TTestResult",
    "all_metrics",
    "balanced_accuracy",
    "confusion_summary",
    "default_grid",
    "f1_scores",
    "fit_predict",
    "grid_search",
    "mcc",
    "mcc_detail",
    "paired_cv_ttest",
    "paired_ttest",
    "predict_subset",
    "rank_on",
    "select_on",
    "summarize_report",
]
