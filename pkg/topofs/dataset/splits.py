import logging
import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from ..errors import ValidationError
from .feature_matrix import FeatureMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SplitResult:
    train_indices: np.ndarray
    test_indices: np.ndarray
    seed: int


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def largest_remainder(counts: np.ndarray, fraction: float) -> np.ndarray:
    """
    Share ``round(sum(counts) * fraction)`` units among classes proportionally to ``counts``.

    Each class gets the floor of its quota; the units left over go to the classes with
    the largest fractional parts, earlier classes first on equal parts.
    """
    counts = np.asarray(counts, dtype=np.int64)
    quotas = counts * fraction
    shares = np.floor(quotas).astype(np.int64)
    total = _round_half_up(float(counts.sum()) * fraction)
    missing = total - int(shares.sum())
    if missing > 0:
        order = np.argsort(-(quotas - shares), kind="stable")
        shares[order[:missing]] += 1
    return shares


def _class_members(labels: np.ndarray) -> Tuple[list, List[np.ndarray]]:
    classes, inverse = np.unique(labels, return_inverse=True)
    members = [np.flatnonzero(inverse == c) for c in range(len(classes))]
    return classes.tolist(), members


def stratified_split(data: FeatureMatrix, test_fraction: float, seed: int = 0) -> SplitResult:
    """
    Split samples into train and test parts preserving per-class proportions.

    Args:
        data (FeatureMatrix): Labelled dataset.
        test_fraction (float): Share of samples going to the test part, in (0, 1).
        seed (int): Seed of the per-class shuffles.

    Returns:
        SplitResult: Sorted, disjoint train and test indices covering every sample.
    """
    labels = data.require_labels()
    if not 0.0 < test_fraction < 1.0:
        raise ValidationError(f"test_fraction must lie in (0, 1), got {test_fraction}")
    classes, members = _class_members(labels)
    counts = np.array([len(m) for m in members])
    for cls, count in zip(classes, counts):
        if count < 2:
            raise ValidationError(f"class {cls!r} has {count} sample, cannot stratify")

    test_counts = largest_remainder(counts, test_fraction)
    if test_counts.sum() == 0 or test_counts.sum() == counts.sum():
        raise ValidationError(f"test_fraction {test_fraction} leaves an empty train or test part")

    rng = np.random.default_rng(seed)
    train, test = [], []
    for idx, n_test in zip(members, test_counts):
        shuffled = rng.permutation(idx)
        test.append(shuffled[:n_test])
        train.append(shuffled[n_test:])
    return SplitResult(
        train_indices=np.sort(np.concatenate(train)),
        test_indices=np.sort(np.concatenate(test)),
        seed=seed,
    )


def stratified_kfold(data: FeatureMatrix, k: int, seed: int = 0) -> List[Tuple[np.ndarray, np.ndarray]]:
    """
    Partition samples into ``k`` stratified folds.

    Samples of each class are shuffled and dealt round robin over the folds. The deal
    resumes at the fold where the previous class stopped, so fold sizes differ by at most one.

    Returns:
        list: ``k`` pairs ``(train_indices, validation_indices)``, each sorted.
    """
    labels = data.require_labels()
    if k < 2:
        raise ValidationError(f"k must be at least 2, got {k}")
    classes, members = _class_members(labels)
    for cls, idx in zip(classes, members):
        if len(idx) < k:
            raise ValidationError(f"class {cls!r} has {len(idx)} samples, fewer than k={k}")

    rng = np.random.default_rng(seed)
    assignment = np.empty(len(labels), dtype=np.int64)
    offset = 0
    for idx in members:
        shuffled = rng.permutation(idx)
        assignment[shuffled] = (offset + np.arange(len(shuffled))) % k
        offset = (offset + len(shuffled)) % k

    everything = np.arange(len(labels))
    folds = []
    for fold in range(k):
        mask = assignment == fold
        folds.append((everything[~mask], everything[mask]))
    return folds
