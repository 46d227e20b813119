import warnings

import numpy as np
from sklearn.exceptions import ConvergenceWarning
from sklearn.svm import LinearSVC

from .classifier import Classifier


class LinearSVMClassifier(Classifier):
    """One-vs-rest L2-regularized squared-hinge linear model."""

    def __init__(self, C: float = 1.0, max_iter: int = 50000, seed: int = 0):
        self.model = LinearSVC(
            C=C,
            loss="squared_hinge",
            penalty="l2",
            dual="auto",
            max_iter=max_iter,
            random_state=seed,
        )

    def fit(self, X, y):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", category=ConvergenceWarning)
            self.model.fit(np.asarray(X, dtype=np.float64), np.asarray(y))
        return self

    def decision_function(self, X):
        return self.model.decision_function(np.asarray(X, dtype=np.float64))

    def predict(self, X):
        # argmax over the one-vs-rest scores, first class on ties
        return self.model.predict(np.asarray(X, dtype=np.float64))
