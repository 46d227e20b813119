# Classification metrics used to score feature subsets.

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from sklearn.metrics import confusion_matrix

from ..errors import ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ConfusionSummary:
    """
    Confusion counts over the class set ``classes``.

    ``matrix[i, j]`` counts samples of true class ``classes[i]`` predicted as ``classes[j]``.
    """
    classes: tuple
    matrix: np.ndarray

    @property
    def tp(self) -> np.ndarray:
        return np.diag(self.matrix)

    @property
    def true_counts(self) -> np.ndarray:
        # T: how many times each class truly occurs.
        return self.matrix.sum(axis=1)

    @property
    def predicted_counts(self) -> np.ndarray:
        # P: how many times each class is predicted.
        return self.matrix.sum(axis=0)

    @property
    def fn(self) -> np.ndarray:
        return self.true_counts - self.tp

    @property
    def fp(self) -> np.ndarray:
        return self.predicted_counts - self.tp

    @property
    def tn(self) -> np.ndarray:
        return self.total - self.tp - self.fp - self.fn

    @property
    def correct(self) -> int:
        return int(self.tp.sum())

    @property
    def total(self) -> int:
        return int(self.matrix.sum())


def confusion_summary(y, y_pred) -> ConfusionSummary:
    y = np.asarray(y)
    y_pred = np.asarray(y_pred)
    if y.shape != y_pred.shape or y.ndim != 1:
        raise ValidationError(f"label vectors differ in shape: {y.shape} vs {y_pred.shape}")
    if len(y) == 0:
        raise ValidationError("metrics need at least one sample")
    classes = np.unique(np.concatenate([y, y_pred]))
    matrix = confusion_matrix(y, y_pred, labels=classes)
    return ConfusionSummary(classes=tuple(classes.tolist()), matrix=matrix)


def _safe_ratio(num: np.ndarray, den: np.ndarray) -> np.ndarray:
    # x / 0 counts as 0.
    num = num.astype(np.float64)
    den = den.astype(np.float64)
    out = np.zeros_like(num)
    np.divide(num, den, out=out, where=den > 0)
    return out


def balanced_accuracy(y, y_pred) -> float:
    """Mean recall over the classes that occur in ``y``."""
    summary = confusion_summary(y, y_pred)
    present = summary.true_counts > 0
    recall = summary.tp[present] / summary.true_counts[present]
    return float(np.mean(recall))


def f1_scores(y, y_pred) -> Tuple[float, float]:
    """
    Returns ``(f1_paper, f1_macro)``.

    ``f1_paper`` is the harmonic mean of macro precision and macro recall, ``f1_macro`` the
    mean of the per-class F1 scores. A class never predicted has precision 0.
    """
    summary = confusion_summary(y, y_pred)
    precision = _safe_ratio(summary.tp, summary.predicted_counts)
    recall = _safe_ratio(summary.tp, summary.true_counts)
    macro_p = float(np.mean(precision))
    macro_r = float(np.mean(recall))
    f1_paper = 0.0 if macro_p + macro_r == 0 else 2 * macro_p * macro_r / (macro_p + macro_r)
    per_class = _safe_ratio(2 * summary.tp, 2 * summary.tp + summary.fp + summary.fn)
    return f1_paper, float(np.mean(per_class))


def mcc_detail(y, y_pred) -> Tuple[float, bool]:
    """
    Multiclass Matthews correlation coefficient and a degeneracy flag.

    (C*S - T.P) / sqrt((S^2 - P.P) * (S^2 - T.T)); a zero denominator gives (0.0, True).
    """
    summary = confusion_summary(y, y_pred)
    c = float(summary.correct)
    s = float(summary.total)
    t = summary.true_counts.astype(np.float64)
    p = summary.predicted_counts.astype(np.float64)
    cov_ytyp = c * s - np.dot(t, p)
    cov_ypyp = s * s - np.dot(p, p)
    cov_ytyt = s * s - np.dot(t, t)
    if cov_ypyp * cov_ytyt == 0:
        logger.warning("MCC denominator is zero (a single true or predicted class), returning 0")
        return 0.0, True
    return float(cov_ytyp / np.sqrt(cov_ytyt * cov_ypyp)), False


def mcc(y, y_pred) -> float:
    return mcc_detail(y, y_pred)[0]


def all_metrics(y, y_pred) -> dict:
    f1_paper, f1_macro = f1_scores(y, y_pred)
    value, degenerate = mcc_detail(y, y_pred)
    return {
        "balanced_accuracy": balanced_accuracy(y, y_pred),
        "f1_paper": f1_paper,
        "f1_macro": f1_macro,
        "mcc": value,
        "mcc_degenerate": degenerate,
    }
