import numpy as np
import pytest

from topofs.dataset import FeatureMatrix, make_latent_dataset, stratified_split
from topofs.errors import NumericalError, ValidationError
from topofs.evaluation import ClassifierSpec, balanced_accuracy, predict_subset
from topofs.selection import (
    FeatureRanking,
    SelectionConfig,
    inffs_score,
    inffs_scores_from_adjacency,
    inffs_select,
    make_selector,
    spectral_radius,
    tfs_rank,
    tfs_select,
)
from topofs.similarity import energy_matrix
from topofs.tmfg import build_tmfg, degree_centrality


def random_features(seed, n, samples=20):
    return FeatureMatrix.from_array(np.random.default_rng(seed).normal(size=(samples, n)))


def truncated_series_scores(W, r, terms=200):
    total = np.zeros_like(W)
    power = np.eye(W.shape[0])
    for _ in range(terms):
        power = power @ (r * W)
        total += power
    return total.sum(axis=1)


def test_config_validation():
    with pytest.raises(ValidationError, match="never squared"):
        SelectionConfig("tfs", metric="energy", squared=True, alpha=0.5)
    with pytest.raises(ValidationError):
        SelectionConfig("tfs", metric="energy")
    with pytest.raises(ValidationError):
        SelectionConfig("tfs", metric="pearson", alpha=0.5)
    with pytest.raises(ValidationError):
        SelectionConfig("inffs", alpha=0.5)
    with pytest.raises(ValidationError):
        SelectionConfig("inffs", alpha=0.5, theta=0.0)
    with pytest.raises(ValidationError):
        SelectionConfig("tfs", metric="pearson", k=0)
    with pytest.raises(ValidationError):
        SelectionConfig("lasso")

    config = SelectionConfig("tfs", metric="spearman", squared=True, k=10)
    assert config.active_parameters() == 2
    assert SelectionConfig("tfs", metric="pearson").active_parameters() == 1
    assert SelectionConfig("inffs", alpha=0.1, theta=0.9).active_parameters() == 2
    assert SelectionConfig.from_dict(config.to_dict()) == config
    assert config.with_k(3).ranking_key() == config.ranking_key()


def test_ranking_tie_rule():
    ranking = FeatureRanking.from_scores([2, 5, 5, 1, 2])
    assert ranking.order.tolist() == [1, 2, 0, 4, 3]
    assert ranking.top(2).tolist() == [1, 2]
    with pytest.raises(ValidationError):
        ranking.top(6)
    with pytest.raises(ValidationError):
        ranking.top(0)


def test_tfs_rank_on_four_features():
    X = random_features(0, 4)
    for metric in ("pearson", "spearman"):
        ranking = tfs_rank(X, SelectionConfig("tfs", metric=metric))
        assert ranking.order.tolist() == [0, 1, 2, 3]
        assert ranking.scores.tolist() == [3, 3, 3, 3]
    config = SelectionConfig("tfs", metric="pearson", k=1)
    assert tfs_select(X, config).tolist() == [0]
    assert sorted(tfs_select(X, config.with_k(4)).tolist()) == [0, 1, 2, 3]
    with pytest.raises(ValidationError):
        tfs_select(X, config.with_k(5))
    with pytest.raises(ValidationError):
        tfs_rank(random_features(0, 3), config)


def test_five_vertex_degrees_rank_first():
    W = np.full((5, 5), 0.9)
    np.fill_diagonal(W, 0.0)
    W[4, :] = W[:, 4] = [0.8, 0.8, 0.8, 0.1, 0.0]
    ranking = FeatureRanking.from_scores(degree_centrality(build_tmfg(W)))
    assert ranking.order[:3].tolist() == [0, 1, 2]


def test_tfs_scores_are_degrees():
    X = random_features(1, 30, samples=40)
    config = SelectionConfig("tfs", metric="energy", alpha=0.4)
    ranking = tfs_rank(X, config)
    assert ranking.scores.sum() == 6 * 30 - 12
    again = make_selector(config).rank(X)
    assert np.array_equal(again.order, ranking.order)


def test_latent_features_are_recovered():
    config = SelectionConfig("tfs", metric="pearson", squared=True, k=10)
    overlaps = []
    for seed in range(20):
        data = make_latent_dataset(n_samples=200, n_informative=10, n_noise=90, seed=seed)
        selected = tfs_select(data, config)
        overlaps.append(int(np.sum(selected < 10)))
    assert np.median(overlaps) >= 6


def test_selected_subset_beats_random_subsets():
    data = make_latent_dataset(seed=0)
    split = stratified_split(data, 0.3, seed=0)
    train = data.take_samples(split.train_indices)
    test = data.take_samples(split.test_indices)
    knn = ClassifierSpec(kind="knn")

    selected = tfs_select(train, SelectionConfig("tfs", metric="pearson", squared=True, k=10))
    chosen = balanced_accuracy(test.labels, predict_subset(train, test, selected, knn))

    rng = np.random.default_rng(0)
    baseline = []
    for _ in range(20):
        subset = np.sort(rng.choice(data.n_features, size=10, replace=False))
        baseline.append(balanced_accuracy(test.labels, predict_subset(train, test, subset, knn)))
    assert chosen >= np.mean(baseline) + 0.05


def test_inffs_matches_truncated_series():
    rng = np.random.default_rng(123)
    for _ in range(50):
        n = int(rng.integers(3, 16))
        X = FeatureMatrix.from_array(rng.normal(size=(25, n)))
        alpha = float(rng.uniform())
        theta = float(rng.choice([0.1, 0.3, 0.5, 0.7, 0.8]))
        W = energy_matrix(X, alpha).values
        r = theta / (spectral_radius(W) + 1e-12)
        expected = truncated_series_scores(W, r)
        ranking = inffs_score(X, alpha, theta)
        assert np.allclose(ranking.scores, expected, atol=1e-9, rtol=0)


def test_spectral_radius_matches_eigenvalues():
    rng = np.random.default_rng(4)
    for _ in range(20):
        upper = np.triu(rng.uniform(size=(12, 12)), 1)
        W = upper + upper.T
        assert spectral_radius(W) == pytest.approx(np.abs(np.linalg.eigvalsh(W)).max(), rel=1e-8)


def test_spectral_radius_of_nonsymmetric_matrix():
    W = np.array([[1.0, 2.0], [0.5, 1.0]])
    assert spectral_radius(W) == pytest.approx(2.0, rel=1e-8)


def test_inffs_at_theta_one_follows_leading_eigenvector():
    rng = np.random.default_rng(2024)
    for _ in range(30):
        X = FeatureMatrix.from_array(rng.normal(size=(30, 12)))
        W = energy_matrix(X, 0.5).values
        r = 1.0 / (spectral_radius(W) + 1e-12)
        assert r * np.abs(np.linalg.eigvalsh(W)).max() < 1.0

        ranking = inffs_score(X, 0.5, 1.0)
        assert np.all(ranking.scores > 0)
        _, vectors = np.linalg.eigh(W)
        leading = np.argsort(-np.abs(vectors[:, -1]), kind="stable")
        assert ranking.order[:3].tolist() == leading[:3].tolist()


def test_inffs_rejects_diverging_series(monkeypatch):
    import topofs.selection.inffs as inffs

    # The true radius of this adjacency is 2; halving it pushes r * rho past 1.
    monkeypatch.setattr(inffs, "spectral_radius", lambda W: 1.0)
    W = np.ones((3, 3)) - np.eye(3)
    with pytest.raises(NumericalError):
        inffs.inffs_scores_from_adjacency(W, 1.0)


def test_inffs_examples():
    assert inffs_scores_from_adjacency(np.zeros((3, 3)), 0.5).tolist() == [0.0, 0.0, 0.0]
    assert FeatureRanking.from_scores(inffs_scores_from_adjacency(np.zeros((3, 3)), 0.5)).order.tolist() == [0, 1, 2]

    star = np.full((5, 5), 0.1)
    star[2, :] = star[:, 2] = 0.9
    np.fill_diagonal(star, 0.0)
    scores = inffs_scores_from_adjacency(star, 0.9)
    assert int(np.argmax(scores)) == 2

    with pytest.raises(ValidationError):
        inffs_scores_from_adjacency(star, 1.5)

    X = random_features(5, 6)
    assert sorted(inffs_select(X, 0.5, 0.9, 6).tolist()) == list(range(6))


def test_inffs_order_is_scale_invariant():
    rng = np.random.default_rng(77)
    for _ in range(20):
        upper = np.triu(rng.uniform(size=(10, 10)), 1)
        W = upper + upper.T
        base = np.argsort(-inffs_scores_from_adjacency(W, 0.5), kind="stable")
        for c in (0.25, 4.0):
            scaled = np.argsort(-inffs_scores_from_adjacency(c * W, 0.5), kind="stable")
            assert np.array_equal(base, scaled)


if __name__ == "__main__":
    pytest.main()
