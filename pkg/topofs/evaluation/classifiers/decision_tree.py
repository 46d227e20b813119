from typing import Optional, Tuple

import numpy as np

from .classifier import Classifier

LEAF = -1


def _gini_of_counts(counts: np.ndarray, sizes: np.ndarray) -> np.ndarray:
    share = counts / sizes[:, None]
    return 1.0 - np.sum(share * share, axis=1)


def best_split(X: np.ndarray, y: np.ndarray, n_classes: int) -> Optional[Tuple[int, float]]:
    """
    Exhaustive CART split search with Gini impurity.

    Candidate thresholds are midpoints between consecutive distinct values of a feature.
    Returns ``(feature, threshold)`` minimizing the weighted child impurity; ties go to the
    smaller feature index, then the smaller threshold. None when every feature is constant.
    """
    n_samples, n_features = X.shape
    onehot = np.eye(n_classes)[y]
    total = onehot.sum(axis=0)
    left_sizes = np.arange(1, n_samples, dtype=np.float64)
    right_sizes = n_samples - left_sizes

    best, best_impurity = None, np.inf
    for feature in range(n_features):
        order = np.argsort(X[:, feature], kind="stable")
        values = X[order, feature]
        distinct = values[1:] > values[:-1]
        if not distinct.any():
            continue
        left = np.cumsum(onehot[order], axis=0)[:-1]
        right = total - left
        impurity = (left_sizes * _gini_of_counts(left, left_sizes)
                    + right_sizes * _gini_of_counts(right, right_sizes)) / n_samples
        impurity[~distinct] = np.inf
        i = int(np.argmin(impurity))
        if impurity[i] < best_impurity:
            threshold = (values[i] + values[i + 1]) / 2.0
            if threshold == values[i + 1]:
                threshold = values[i]
            best, best_impurity = (feature, float(threshold)), impurity[i]
    return best


class DecisionTreeClassifier(Classifier):
    """CART with Gini impurity and no depth limit; grows until leaves are pure or unsplittable."""

    def __init__(self, seed: int = 0):
        # The split search is exhaustive and deterministic; the seed is kept for provenance.
        self.seed = seed

    def fit(self, X, y):
        X = np.asarray(X, dtype=np.float64)
        self.classes, y_idx = np.unique(np.asarray(y), return_inverse=True)
        n_classes = len(self.classes)

        self.feature, self.threshold, self.left, self.right, self.label = [], [], [], [], []

        def new_node(samples):
            self.feature.append(LEAF)
            self.threshold.append(0.0)
            self.left.append(LEAF)
            self.right.append(LEAF)
            # majority class, smallest class on ties
            self.label.append(int(np.argmax(np.bincount(y_idx[samples], minlength=n_classes))))
            return len(self.feature) - 1

        stack = [(new_node(np.arange(len(X))), np.arange(len(X)))]
        while stack:
            node, samples = stack.pop()
            if np.all(y_idx[samples] == y_idx[samples[0]]):
                continue
            split = best_split(X[samples], y_idx[samples], n_classes)
            if split is None:
                continue
            feature, threshold = split
            goes_left = X[samples, feature] <= threshold
            left, right = samples[goes_left], samples[~goes_left]
            self.feature[node] = feature
            self.threshold[node] = threshold
            self.left[node] = new_node(left)
            self.right[node] = new_node(right)
            stack.append((self.right[node], right))
            stack.append((self.left[node], left))

        self.feature = np.array(self.feature)
        self.threshold = np.array(self.threshold)
        self.left = np.array(self.left)
        self.right = np.array(self.right)
        self.label = np.array(self.label)
        return self

    @property
    def node_count(self) -> int:
        return len(self.feature)

    def predict(self, X):
        X = np.asarray(X, dtype=np.float64)
        nodes = np.zeros(len(X), dtype=np.int64)
        active = self.feature[nodes] != LEAF
        while active.any():
            rows = np.flatnonzero(active)
            current = nodes[rows]
            go_left = X[rows, self.feature[current]] <= self.threshold[current]
            nodes[rows] = np.where(go_left, self.left[current], self.right[current])
            active = self.feature[nodes] != LEAF
        return self.classes[self.label[nodes]]
