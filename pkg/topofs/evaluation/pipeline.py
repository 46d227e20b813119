from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..dataset.feature_matrix import FeatureMatrix
from ..dataset.preprocessing import apply_standardizer, fit_standardizer, prune_constant_features
from ..errors import ValidationError
from ..selection import FeatureRanking, SelectionConfig, make_selector
from .classifiers import ClassifierSpec, fit_predict
from .metrics import balanced_accuracy


def rank_on(train: FeatureMatrix, config: SelectionConfig) -> Tuple[np.ndarray, FeatureRanking]:
    """Prune features constant on ``train``, then rank the rest. Returns ``(kept_indices, ranking)``."""
    (pruned,), kept = prune_constant_features(train)
    return kept, make_selector(config).rank(pruned)


def select_on(train: FeatureMatrix, config: SelectionConfig, k: int) -> np.ndarray:
    kept, ranking = rank_on(train, config)
    return kept[ranking.top(k)]


def predict_subset(train: FeatureMatrix, test: FeatureMatrix, selected, classifier: ClassifierSpec) -> np.ndarray:
    """Standardize the selected columns with train statistics, fit on train and predict test."""
    # Column order follows feature index, not rank.
    selected = np.sort(np.asarray(selected, dtype=np.int64))
    train_sub = train.take_features(selected)
    test_sub = test.take_features(selected)
    standardizer = fit_standardizer(train_sub)
    return fit_predict(
        classifier,
        apply_standardizer(standardizer, train_sub),
        apply_standardizer(standardizer, test_sub),
    )


@dataclass(frozen=True)
class Pipeline:
    """Fixed selection configuration followed by a classifier."""
    selection: SelectionConfig
    classifier: ClassifierSpec

    def __post_init__(self):
        if self.selection.k is None:
            raise ValidationError("a pipeline needs a cardinality k")

    def predict(self, train: FeatureMatrix, test: FeatureMatrix) -> np.ndarray:
        selected = select_on(train, self.selection, self.selection.k)
        return predict_subset(train, test, selected, self.classifier)

    def score(self, train: FeatureMatrix, test: FeatureMatrix) -> float:
        return balanced_accuracy(test.require_labels(), self.predict(train, test))

    def to_dict(self) -> dict:
        content = self.selection.to_dict()
        content["classifier"] = self.classifier.to_dict()
        return content

    @classmethod
    def from_dict(cls, content: dict) -> "Pipeline":
        content = dict(content)
        classifier = content.pop("classifier", None)
        if classifier is None:
            raise ValidationError("a pipeline needs a classifier")
        if isinstance(classifier, str):
            classifier = {"kind": classifier}
        else:
            classifier = dict(classifier)
        if "knn_k" in content:
            classifier["knn_k"] = content.pop("knn_k")
        return cls(selection=SelectionConfig.from_dict(content), classifier=ClassifierSpec.from_dict(classifier))

    @classmethod
    def build(cls, config: SelectionConfig, classifier: Optional[ClassifierSpec] = None) -> "Pipeline":
        return cls(selection=config, classifier=classifier or ClassifierSpec(kind="knn"))
