import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
from sklearn.preprocessing import StandardScaler

from ..errors import ValidationError
from .feature_matrix import FeatureMatrix

logger = logging.getLogger(__name__)


def constant_columns(values: np.ndarray) -> np.ndarray:
    """Boolean mask of columns whose values are all identical."""
    if values.shape[0] == 0:
        return np.zeros(values.shape[1], dtype=bool)
    return np.all(values == values[0], axis=0)


def prune_constant_features(
    train: FeatureMatrix, others: Sequence[FeatureMatrix] = ()
) -> Tuple[List[FeatureMatrix], np.ndarray]:
    """
    Remove features that are constant on the training set from every matrix.

    Detection looks at ``train`` only; a feature that varies on train but is constant
    on another matrix is kept.

    Returns:
        tuple: ``[pruned train, *pruned others]`` and ``kept_indices`` mapping new to old positions.
    """
    for other in others:
        if other.n_features != train.n_features:
            raise ValidationError(
                f"feature count mismatch: train has {train.n_features}, other has {other.n_features}"
            )
        if other.feature_names != train.feature_names:
            raise ValidationError("feature names differ between train and other matrices")

    kept = np.flatnonzero(~constant_columns(train.values))
    if len(kept) == train.n_features:
        return [train, *others], kept

    logger.info("pruned %d constant features", train.n_features - len(kept))
    pruned = [m.take_features(kept) for m in (train, *others)]
    return pruned, kept


@dataclass(frozen=True, eq=False)
class Standardizer:
    """Per-feature z-score fitted on training data (population standard deviation)."""
    means: np.ndarray
    std_devs: np.ndarray

    def transform(self, values: np.ndarray) -> np.ndarray:
        values = np.asarray(values, dtype=np.float64)
        if values.shape[1] != len(self.means):
            raise ValidationError(f"standardizer fitted on {len(self.means)} features, got {values.shape[1]}")
        return (values - self.means) / self.std_devs


def fit_standardizer(train: FeatureMatrix) -> Standardizer:
    if train.n_samples == 0:
        raise ValidationError("cannot fit a standardizer on zero samples")
    scaler = StandardScaler().fit(train.values)
    zero = np.flatnonzero(constant_columns(train.values))
    if len(zero):
        raise ValidationError(
            f"feature {train.feature_names[zero[0]]!r} has zero variance, prune constant features first"
        )
    return Standardizer(means=scaler.mean_.copy(), std_devs=scaler.scale_.copy())


def apply_standardizer(standardizer: Standardizer, data: FeatureMatrix) -> FeatureMatrix:
    return data.with_values(standardizer.transform(data.values))
