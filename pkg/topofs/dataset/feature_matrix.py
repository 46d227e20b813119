from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from ..errors import ValidationError


@dataclass(frozen=True, eq=False)
class FeatureMatrix:
    """
    A samples x features table of real numbers with feature names and optional labels.

    Args:
        values (np.ndarray): Array of shape (S, n), finite entries only.
        feature_names (Sequence[str]): Unique names, one per column.
        labels (np.ndarray, optional): One class identifier per sample.
    """
    values: np.ndarray
    feature_names: tuple
    labels: Optional[np.ndarray] = None
    class_set: tuple = field(init=False)

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 2:
            raise ValidationError(f"values must be two dimensional, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            rows, cols = np.nonzero(~np.isfinite(values))
            raise ValidationError(f"non-finite value at sample {rows[0]}, feature {cols[0]}")
        names = tuple(str(name) for name in self.feature_names)
        if len(names) != values.shape[1]:
            raise ValidationError(f"{len(names)} feature names for {values.shape[1]} columns")
        if len(set(names)) != len(names):
            raise ValidationError("feature names must be unique")

        labels = self.labels
        classes = ()
        if labels is not None:
            labels = np.array(labels)
            if labels.ndim != 1 or labels.shape[0] != values.shape[0]:
                raise ValidationError(f"{labels.size} labels for {values.shape[0]} samples")
            classes = tuple(np.unique(labels).tolist())

        values.setflags(write=False)
        if labels is not None:
            labels.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "feature_names", names)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "class_set", classes)

    @classmethod
    def from_array(cls, values, labels=None, feature_names: Optional[Sequence[str]] = None) -> "FeatureMatrix":
        values = np.asarray(values, dtype=np.float64)
        if feature_names is None:
            feature_names = [f"f{i}" for i in range(values.shape[1])]
        return cls(values=values, feature_names=tuple(feature_names), labels=labels)

    @property
    def n_samples(self) -> int:
        return self.values.shape[0]

    @property
    def n_features(self) -> int:
        return self.values.shape[1]

    @property
    def has_labels(self) -> bool:
        return self.labels is not None

    def require_labels(self) -> np.ndarray:
        if self.labels is None:
            raise ValidationError("this operation needs labels")
        return self.labels

    def take_samples(self, indices) -> "FeatureMatrix":
        indices = np.asarray(indices, dtype=np.int64)
        labels = None if self.labels is None else self.labels[indices]
        return FeatureMatrix(self.values[indices], self.feature_names, labels)

    def take_features(self, indices) -> "FeatureMatrix":
        indices = np.asarray(indices, dtype=np.int64)
        names = tuple(self.feature_names[i] for i in indices)
        return FeatureMatrix(self.values[:, indices], names, self.labels)

    def with_values(self, values) -> "FeatureMatrix":
        return FeatureMatrix(values, self.feature_names, self.labels)
