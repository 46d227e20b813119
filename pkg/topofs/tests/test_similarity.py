import numpy as np
import pytest

from topofs.dataset import FeatureMatrix
from topofs.errors import ValidationError
from topofs.similarity import (
    apply_square,
    compute_similarity,
    energy_matrix,
    pearson_matrix,
    rank_average,
    spearman_matrix,
)


def columns(*cols):
    return FeatureMatrix.from_array(np.column_stack(cols))


def naive_pearson(x, y):
    dx = x - x.mean()
    dy = y - y.mean()
    return float(np.sum(dx * dy) / np.sqrt(np.sum(dx * dx) * np.sum(dy * dy)))


def naive_ranks(x):
    order = sorted(range(len(x)), key=lambda i: x[i])
    ranks = np.empty(len(x))
    i = 0
    while i < len(x):
        j = i
        while j + 1 < len(x) and x[order[j + 1]] == x[order[i]]:
            j += 1
        for p in range(i, j + 1):
            ranks[order[p]] = (i + j) / 2 + 1
        i = j + 1
    return ranks


def test_pearson_examples():
    x = np.array([1.0, 2.0, 3.0, 4.0])
    sim = pearson_matrix(columns(x, x, -x, np.array([1.0, 3.0, 2.0, 4.0])))
    assert sim.values[0, 1] == pytest.approx(1.0)
    assert sim.values[0, 2] == pytest.approx(-1.0)
    assert sim.values[0, 3] == pytest.approx(0.8)
    assert np.all(np.diag(sim.values) == 1.0)


def test_spearman_examples():
    assert rank_average([1, 2, 2, 4]).tolist() == [1.0, 2.5, 2.5, 4.0]
    sim = spearman_matrix(columns(np.array([1.0, 2.0, 3.0]), np.array([1.0, 4.0, 9.0]), np.array([3.0, 2.0, 0.0])))
    assert sim.values[0, 1] == pytest.approx(1.0)
    assert sim.values[0, 2] == pytest.approx(-1.0)


def test_rank_sum_is_preserved():
    rng = np.random.default_rng(0)
    x = rng.integers(0, 5, size=40)
    ranks = rank_average(x)
    assert ranks.sum() == pytest.approx(40 * 41 / 2)
    assert np.allclose(ranks, naive_ranks(x))


def test_energy_examples():
    x = np.array([0.0, 0.5, 1.0])
    same = energy_matrix(columns(x, x.copy()), alpha=0.0)
    assert same.values[0, 1] == pytest.approx(0.0)
    assert same.values[0, 0] == 0.0

    narrow = np.array([0.8, 0.5, 0.2])
    spread = energy_matrix(columns(x, narrow), alpha=1.0)
    assert spread.values[0, 1] == pytest.approx(np.sqrt(1 / 6))

    half = energy_matrix(columns(x, narrow), alpha=0.5)
    rho = 1.0 - abs(spearman_matrix(columns(x, narrow)).values[0, 1])
    assert half.values[0, 1] == pytest.approx(0.5 * np.sqrt(1 / 6) + 0.5 * rho)
    assert half.alpha == 0.5

    with pytest.raises(ValidationError):
        energy_matrix(columns(x, narrow), alpha=1.5)


def test_square():
    x = np.array([1.0, 2.0, 3.0, 4.0])
    y = np.array([2.0, 1.0, 4.0, 3.0])
    sim = pearson_matrix(columns(x, y))
    squared = apply_square(sim)
    assert squared.squared
    assert squared.values[0, 1] == pytest.approx(sim.values[0, 1] ** 2)
    assert np.all(np.diag(squared.values) == 1.0)

    with pytest.raises(ValidationError, match="never squared"):
        apply_square(energy_matrix(columns(x, y), 0.5))
    with pytest.raises(ValidationError, match="never squared"):
        compute_similarity(columns(x, y), "energy", squared=True, alpha=0.5)
    with pytest.raises(ValidationError):
        apply_square(squared)


def test_constant_column_is_rejected():
    x = np.array([1.0, 2.0, 3.0])
    for metric, alpha in (("pearson", None), ("spearman", None), ("energy", 0.5)):
        with pytest.raises(ValidationError, match="constant"):
            compute_similarity(columns(x, np.ones(3)), metric, alpha=alpha)
    with pytest.raises(ValidationError):
        pearson_matrix(FeatureMatrix.from_array([[1.0, 2.0]]))


def test_matrices_match_naive_loops():
    rng = np.random.default_rng(42)
    for _ in range(5):
        values = rng.normal(size=(30, 8))
        values[:, 3] = np.round(values[:, 3])
        X = FeatureMatrix.from_array(values)
        ranks = np.column_stack([naive_ranks(values[:, j]) for j in range(8)])
        normalized = (values - values.min(axis=0)) / (values.max(axis=0) - values.min(axis=0))
        sigma = normalized.std(axis=0)

        pearson = pearson_matrix(X).values
        spearman = spearman_matrix(X).values
        energy = energy_matrix(X, 0.3).values
        for i in range(8):
            for j in range(8):
                if i == j:
                    continue
                assert pearson[i, j] == pytest.approx(naive_pearson(values[:, i], values[:, j]), abs=1e-12)
                rs = naive_pearson(ranks[:, i], ranks[:, j])
                assert spearman[i, j] == pytest.approx(rs, abs=1e-12)
                expected = 0.3 * max(sigma[i], sigma[j]) + 0.7 * (1 - abs(rs))
                assert energy[i, j] == pytest.approx(expected, abs=1e-12)


def test_symmetry_and_ranges():
    rng = np.random.default_rng(8)
    X = FeatureMatrix.from_array(rng.normal(size=(25, 12)))
    for metric, squared, alpha in (("pearson", False, None), ("pearson", True, None),
                                   ("spearman", True, None), ("energy", False, 0.7)):
        sim = compute_similarity(X, metric, squared=squared, alpha=alpha)
        assert np.array_equal(sim.values, sim.values.T)
        low = -1.0 if metric != "energy" and not squared else 0.0
        assert sim.values.min() >= low
        assert sim.values.max() <= 1.0


def test_invariances():
    rng = np.random.default_rng(9)
    values = rng.normal(size=(20, 3))
    base = pearson_matrix(FeatureMatrix.from_array(values)).values
    scaled = values.copy()
    scaled[:, 0] = 3.0 * scaled[:, 0] + 7.0
    assert pearson_matrix(FeatureMatrix.from_array(scaled)).values[0, 1] == pytest.approx(base[0, 1])
    scaled[:, 0] = -2.0 * values[:, 0]
    assert pearson_matrix(FeatureMatrix.from_array(scaled)).values[0, 1] == pytest.approx(-base[0, 1])

    monotone = values.copy()
    monotone[:, 1] = np.exp(monotone[:, 1])
    assert np.allclose(spearman_matrix(FeatureMatrix.from_array(monotone)).values,
                       spearman_matrix(FeatureMatrix.from_array(values)).values)

    spearman = spearman_matrix(FeatureMatrix.from_array(values)).values
    energy = energy_matrix(FeatureMatrix.from_array(values), 0.0).values
    off = ~np.eye(3, dtype=bool)
    assert np.allclose(energy[off], 1.0 - np.abs(spearman[off]), atol=1e-12)


if __name__ == "__main__":
    pytest.main()
