import logging

import numpy as np
from scipy import linalg

from ..dataset.feature_matrix import FeatureMatrix
from ..errors import NumericalError, ValidationError
from ..similarity import energy_matrix
from .config import SelectionConfig
from .ranking import FeatureRanking
from .selector import Selector

logger = logging.getLogger(__name__)

EPSILON = 1e-12
POWER_ITERATIONS = 200
POWER_TOLERANCE = 1e-10
SIGN_TOLERANCE = 1e-9


def spectral_radius(W: np.ndarray, max_iter: int = POWER_ITERATIONS, tol: float = POWER_TOLERANCE) -> float:
    """
    Largest absolute eigenvalue of ``W``.

    Symmetric matrices use ``scipy.linalg.eigvalsh``, so ``r * rho`` stays below 1 at theta = 1.
    Other matrices use power iteration from the all-ones vector.
    """
    W = np.asarray(W, dtype=np.float64)
    if W.shape[0] == 0:
        return 0.0
    if np.array_equal(W, W.T):
        return float(np.abs(linalg.eigvalsh(W)).max())
    return _power_iteration(W, max_iter, tol)


def _power_iteration(W: np.ndarray, max_iter: int, tol: float) -> float:
    v = np.ones(W.shape[0]) / np.sqrt(W.shape[0])
    rho = 0.0
    for _ in range(max_iter):
        w = W @ v
        norm = np.linalg.norm(w)
        if norm == 0.0:
            return 0.0
        converged = rho > 0.0 and abs(norm - rho) <= tol * norm
        rho = norm
        v = w / norm
        if converged:
            break
    return float(rho)


def inffs_scores_from_adjacency(W: np.ndarray, theta: float) -> np.ndarray:
    """
    Row sums of the path series ``sum_{l>=1} (r W)^l = (I - r W)^-1 - I``.

    ``r = theta / (rho(W) + 1e-12)`` keeps the series convergent for theta < 1.

    Args:
        W (np.ndarray): Symmetric nonnegative adjacency.
        theta (float): Regularization factor in (0, 1].

    Returns:
        np.ndarray: One score per feature.
    """
    if not 0.0 < theta <= 1.0:
        raise ValidationError(f"theta must lie in (0, 1], got {theta}")
    W = np.asarray(W, dtype=np.float64)
    n = W.shape[0]
    rho = spectral_radius(W)
    r = theta / (rho + EPSILON)
    system = np.eye(n) - r * W
    ones = np.ones(n)
    try:
        totals = linalg.solve(system, ones)
    except linalg.LinAlgError as exc:
        raise NumericalError(f"I - rW is singular (theta={theta}): {exc}") from None
    scores = totals - ones
    if not np.all(np.isfinite(scores)):
        raise NumericalError(f"Inf-FS scores are not finite (theta={theta})")
    # Every path weight of a nonnegative W is nonnegative; a negative total means the series diverged.
    if np.all(W >= 0) and scores.min() < -SIGN_TOLERANCE * max(1.0, float(np.abs(scores).max())):
        raise NumericalError(
            f"Inf-FS path series diverged (theta={theta}, r*rho={r * rho:.17g}, "
            f"min score {scores.min():.6g})"
        )
    return scores


def inffs_score(X: FeatureMatrix, alpha: float, theta: float) -> FeatureRanking:
    if X.n_features < 2:
        raise ValidationError(f"inffs needs at least 2 features, got {X.n_features}")
    W = energy_matrix(X, alpha).values
    return FeatureRanking.from_scores(inffs_scores_from_adjacency(W, theta))


def inffs_select(X: FeatureMatrix, alpha: float, theta: float, k: int) -> np.ndarray:
    return inffs_score(X, alpha, theta).top(k)


class InfFSSelector(Selector):
    """Unsupervised infinite feature selection on the energy adjacency."""

    def __init__(self, alpha: float, theta: float):
        self.config = SelectionConfig(method="inffs", alpha=alpha, theta=theta)

    @classmethod
    def from_config(cls, config: SelectionConfig) -> "InfFSSelector":
        if config.method != "inffs":
            raise ValidationError(f"expected an inffs configuration, got method {config.method!r}")
        return cls(alpha=config.alpha, theta=config.theta)

    def rank(self, X: FeatureMatrix) -> FeatureRanking:
        return inffs_score(X, self.config.alpha, self.config.theta)
