import numpy as np
from scipy.stats import rankdata

from ..dataset.feature_matrix import FeatureMatrix
from ..dataset.preprocessing import constant_columns
from ..errors import ValidationError
from .matrix import SimilarityMatrix, symmetric_from_upper

# Fractional ranks, one per sample.
RankVector = np.ndarray


def _check_columns(values: np.ndarray, names) -> None:
    if values.shape[0] < 2:
        raise ValidationError(f"need at least 2 samples, got {values.shape[0]}")
    constant = np.flatnonzero(constant_columns(values))
    if len(constant):
        raise ValidationError(
            f"feature {names[constant[0]]!r} is constant, prune constant features first"
        )


def _correlation(values: np.ndarray) -> np.ndarray:
    corr = np.corrcoef(values, rowvar=False)
    if corr.ndim == 0:
        corr = np.array([[1.0]])
    return symmetric_from_upper(np.clip(corr, -1.0, 1.0), 1.0)


def pearson_matrix(X: FeatureMatrix) -> SimilarityMatrix:
    _check_columns(X.values, X.feature_names)
    return SimilarityMatrix(values=_correlation(X.values), metric="pearson")


def rank_average(x) -> RankVector:
    """Ranks starting at 1; tied values share the average of the ranks they span."""
    return rankdata(np.asarray(x, dtype=np.float64), method="average")


def spearman_matrix(X: FeatureMatrix) -> SimilarityMatrix:
    _check_columns(X.values, X.feature_names)
    ranks = rankdata(X.values, method="average", axis=0)
    return SimilarityMatrix(values=_correlation(ranks), metric="spearman")
