from abc import ABC, abstractmethod

import numpy as np


class Classifier(ABC):
    @abstractmethod
    def fit(self, X: np.ndarray, y: np.ndarray) -> "Classifier":
        pass

    @abstractmethod
    def predict(self, X: np.ndarray) -> np.ndarray:
        pass
