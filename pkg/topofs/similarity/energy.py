import numpy as np

from ..dataset.feature_matrix import FeatureMatrix
from ..errors import ValidationError
from .correlation import spearman_matrix
from .matrix import SimilarityMatrix


def energy_matrix(X: FeatureMatrix, alpha: float) -> SimilarityMatrix:
    """
    Energy coefficient ``alpha * E + (1 - alpha) * (1 - |spearman|)``.

    ``E[i, j]`` is the larger population standard deviation of features i and j after
    min-max normalization to [0, 1]. The spearman term uses the original columns. The
    diagonal is 0.

    Args:
        X (FeatureMatrix): Data without constant features.
        alpha (float): Weight of the dispersion term, in [0, 1].
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValidationError(f"alpha must lie in [0, 1], got {alpha}")
    spearman = spearman_matrix(X)

    lo = X.values.min(axis=0)
    hi = X.values.max(axis=0)
    normalized = (X.values - lo) / (hi - lo)
    sigma = normalized.std(axis=0)
    dispersion = np.maximum.outer(sigma, sigma)
    uncorrelation = 1.0 - np.abs(spearman.values)

    values = np.clip(alpha * dispersion + (1.0 - alpha) * uncorrelation, 0.0, 1.0)
    np.fill_diagonal(values, 0.0)
    return SimilarityMatrix(values=values, metric="energy", alpha=float(alpha))
