from dataclasses import dataclass

import numpy as np

from ..errors import ValidationError

TIE_RULE = "descending score, ties by ascending feature index"


@dataclass(frozen=True, eq=False)
class FeatureRanking:
    order: np.ndarray
    scores: np.ndarray
    tie_rule: str = TIE_RULE

    @classmethod
    def from_scores(cls, scores) -> "FeatureRanking":
        scores = np.asarray(scores)
        order = np.lexsort((np.arange(len(scores)), -scores))
        return cls(order=order, scores=scores)

    def top(self, k: int) -> np.ndarray:
        if isinstance(k, bool) or int(k) != k or k < 1:
            raise ValidationError(f"k must be a positive integer, got {k}")
        if k > len(self.order):
            raise ValidationError(f"k={k} exceeds the {len(self.order)} available features")
        return self.order[:k]

    def to_dict(self) -> dict:
        return {
            "order": self.order.tolist(),
            "scores": self.scores.tolist(),
            "tie_rule": self.tie_rule,
        }
