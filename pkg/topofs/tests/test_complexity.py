import time

import numpy as np

from topofs.dataset import FeatureMatrix
from topofs.selection import SelectionConfig, inffs_score, tfs_rank


def timed_rank(n, samples=50, seed=0):
    X = FeatureMatrix.from_array(np.random.default_rng(seed).normal(size=(samples, n)))
    start = time.perf_counter()
    ranking = tfs_rank(X, SelectionConfig("tfs", metric="pearson", squared=True))
    elapsed = time.perf_counter() - start
    assert ranking.scores.sum() == 6 * n - 12
    return elapsed


def test_tfs_grows_about_quadratically():
    timed_rank(200)
    small = min(timed_rank(2000, seed=s) for s in range(2))
    large = timed_rank(4000)
    assert large / small < 6.0


def test_inffs_handles_a_thousand_features():
    X = FeatureMatrix.from_array(np.random.default_rng(1).normal(size=(50, 1000)))
    ranking = inffs_score(X, alpha=0.5, theta=0.9)
    assert sorted(ranking.order.tolist()) == list(range(1000))
    assert np.all(np.isfinite(ranking.scores))
