import numpy as np
from scipy.spatial.distance import cdist

from .classifier import Classifier


class KNeighborsClassifier(Classifier):
    """
    Majority vote among the ``n_neighbors`` closest training points (Euclidean).

    Equal distances are ordered by training index. When several labels share the top
    vote, the label of the nearest neighbor among them wins.
    """

    def __init__(self, n_neighbors: int = 5):
        self.n_neighbors = n_neighbors

    def fit(self, X, y):
        self.X = np.asarray(X, dtype=np.float64)
        self.classes, self.y_idx = np.unique(np.asarray(y), return_inverse=True)
        return self

    def predict(self, X):
        distances = cdist(np.asarray(X, dtype=np.float64), self.X, metric="euclidean")
        k = min(self.n_neighbors, self.X.shape[0])
        neighbors = np.argsort(distances, axis=1, kind="stable")[:, :k]
        neighbor_labels = self.y_idx[neighbors]

        predictions = np.empty(len(neighbors), dtype=np.int64)
        for row, labels in enumerate(neighbor_labels):
            votes = np.bincount(labels, minlength=len(self.classes))
            winners = votes == votes.max()
            # labels are in distance order, first winner is the nearest
            predictions[row] = labels[np.argmax(winners[labels])]
        return self.classes[predictions]
