from dataclasses import asdict, dataclass

import numpy as np

from ...dataset.feature_matrix import FeatureMatrix
from ...errors import NumericalError, TopoFSError, ValidationError
from .classifier import Classifier
from .decision_tree import DecisionTreeClassifier
from .knn import KNeighborsClassifier
from .linear_svm import LinearSVMClassifier

CLASSIFIERS = ("knn", "decision_tree", "linear_svm")


@dataclass(frozen=True)
class ClassifierSpec:
    kind: str
    knn_k: int = 5
    C: float = 1.0
    max_iter: int = 50000
    seed: int = 0

    def __post_init__(self):
        if self.kind not in CLASSIFIERS:
            raise ValidationError(f"unknown classifier {self.kind!r}, expected one of {CLASSIFIERS}")
        if self.knn_k < 1:
            raise ValidationError(f"knn_k must be positive, got {self.knn_k}")
        if self.C <= 0:
            raise ValidationError(f"C must be positive, got {self.C}")

    def build(self) -> Classifier:
        if self.kind == "knn":
            return KNeighborsClassifier(n_neighbors=self.knn_k)
        if self.kind == "decision_tree":
            return DecisionTreeClassifier(seed=self.seed)
        return LinearSVMClassifier(C=self.C, max_iter=self.max_iter, seed=self.seed)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, content) -> "ClassifierSpec":
        if isinstance(content, str):
            return cls(kind=content)
        return cls(**content)


def fit_predict(spec: ClassifierSpec, train: FeatureMatrix, test: FeatureMatrix) -> np.ndarray:
    """
    Fit the classifier described by ``spec`` on ``train`` and label the rows of ``test``.

    Features are expected to be standardized already, with statistics from ``train``.
    A training set with a single class predicts that class everywhere. Errors raised by the
    underlying estimator surface as NumericalError.
    """
    labels = train.require_labels()
    if train.n_samples == 0:
        raise ValidationError("cannot fit a classifier on an empty training set")
    if test.n_features != train.n_features:
        raise ValidationError(
            f"test has {test.n_features} features, the classifier was trained on {train.n_features}"
        )
    classes = np.unique(labels)
    if len(classes) == 1:
        return np.full(test.n_samples, classes[0], dtype=classes.dtype)
    try:
        return spec.build().fit(train.values, labels).predict(test.values)
    except TopoFSError:
        raise
    except (ValueError, ArithmeticError) as exc:
        raise NumericalError(f"{spec.kind} classifier failed: {exc}") from exc
