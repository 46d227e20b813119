"""Pairwise similarity matrices between features."""

import logging
from typing import Optional

from ..dataset.feature_matrix import FeatureMatrix
from ..errors import ValidationError
from .correlation import RankVector, pearson_matrix, rank_average, spearman_matrix
from .energy import energy_matrix
from .matrix import METRICS, SimilarityMatrix, apply_square

logger = logging.getLogger(__name__)


def compute_similarity(X: FeatureMatrix, metric: str, squared: bool = False,
                       alpha: Optional[float] = None) -> SimilarityMatrix:
    """Dispatch on ``metric`` and square the result when asked to."""
    if metric == "pearson":
        similarity = pearson_matrix(X)
    elif metric == "spearman":
        similarity = spearman_matrix(X)
    elif metric == "energy":
        if alpha is None:
            raise ValidationError("the energy metric needs alpha")
        similarity = energy_matrix(X, alpha)
    else:
        raise ValidationError(f"unknown metric {metric!r}, expected one of {METRICS}")
    if squared:
        similarity = apply_square(similarity)
    logger.debug("computed %s similarity (squared=%s) on %d features", metric, squared, X.n_features)
    return similarity


__all__ = [
    "METRICS",
    "RankVector",
    "SimilarityMatrix",
    "apply_square",
    "compute_similarity",
    "energy_matrix",
    "pearson_matrix",
    "rank_average",
    "spearman_matrix",
]
