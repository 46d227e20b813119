from abc import ABC, abstractmethod

import numpy as np

from ..dataset.feature_matrix import FeatureMatrix
from .ranking import FeatureRanking


class Selector(ABC):
    @abstractmethod
    def rank(self, X: FeatureMatrix) -> FeatureRanking:
        pass

    def select(self, X: FeatureMatrix, k: int) -> np.ndarray:
        return self.rank(X).top(k)
