import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

from ..dataset.feature_matrix import FeatureMatrix
from ..dataset.splits import stratified_kfold
from ..errors import NumericalError, ValidationError
from ..selection import SelectionConfig
from .classifiers import ClassifierSpec
from .metrics import balanced_accuracy
from .pipeline import predict_subset, rank_on

logger = logging.getLogger(__name__)

ALPHAS = tuple(round(0.1 * i, 1) for i in range(1, 11))
THETAS = ALPHAS


def default_grid(method: str, grids: Optional[dict] = None) -> List[SelectionConfig]:
    """
    Search space of ``method`` in enumeration order.

    tfs: pearson and spearman with square in (True, False), then energy for every alpha.
    inffs: every (alpha, theta) pair, alpha outermost. ``grids`` may narrow any axis.
    """
    grids = grids or {}
    if method == "tfs":
        metrics = grids.get("metrics", ("pearson", "spearman", "energy"))
        squared_options = grids.get("squared", (True, False))
        alphas = grids.get("alphas", ALPHAS)
        configs = []
        for metric in metrics:
            if metric == "energy":
                configs.extend(SelectionConfig("tfs", metric="energy", alpha=a) for a in alphas)
            else:
                configs.extend(SelectionConfig("tfs", metric=metric, squared=s) for s in squared_options)
        return configs
    if method == "inffs":
        alphas = grids.get("alphas", ALPHAS)
        thetas = grids.get("thetas", THETAS)
        return [SelectionConfig("inffs", alpha=a, theta=t) for a in alphas for t in thetas]
    raise ValidationError(f"unknown method {method!r}")


@dataclass
class GridSearchResult:
    best: SelectionConfig
    cv_score: float
    trace: List[dict] = field(default_factory=list)


def _evaluate_config(index, config, train, folds, k, classifier, rankings) -> dict:
    labels = train.require_labels()
    fold_scores = []
    try:
        for fold, (train_idx, valid_idx) in enumerate(folds):
            key = (config.ranking_key(), fold)
            if key not in rankings:
                rankings[key] = rank_on(train.take_samples(train_idx), config)
            kept, ranking = rankings[key]
            selected = kept[ranking.top(k)]
            predictions = predict_subset(
                train.take_samples(train_idx), train.take_samples(valid_idx), selected, classifier
            )
            fold_scores.append(balanced_accuracy(labels[valid_idx], predictions))
    except NumericalError as exc:
        logger.warning("configuration %s failed: %s", config, exc)
        return {"index": index, "config": config, "mean": None, "fold_scores": fold_scores, "error": str(exc)}
    mean = float(np.mean(fold_scores))
    logger.debug("config %s: cv balanced accuracy %.6f", config, mean)
    return {"index": index, "config": config, "mean": mean, "fold_scores": fold_scores, "error": None}


def grid_search(train: FeatureMatrix,
                method: str,
                classifier: ClassifierSpec,
                k: int,
                cv_k: int = 3,
                seed: int = 0,
                grid: Optional[Sequence[SelectionConfig]] = None,
                n_jobs: int = 1,
                progress: bool = False,
                rankings: Optional[Dict] = None) -> GridSearchResult:
    """
    Pick the selection configuration with the best mean validation balanced accuracy.

    Each configuration is scored by stratified ``cv_k``-fold cross-validation on ``train``:
    select on the fold's training part, standardize, fit ``classifier``, score the
    validation part. Ties go to fewer active hyper-parameters, then to enumeration order.

    Args:
        rankings (dict, optional): Ranking cache shared between calls that use the same
            ``train``, ``cv_k`` and ``seed`` (for instance several cardinalities).
    """
    if k > train.n_features:
        raise ValidationError(f"k={k} exceeds the {train.n_features} features left after pruning")
    folds = stratified_kfold(train, cv_k, seed)
    configs = list(grid) if grid is not None else default_grid(method)
    if not configs:
        raise ValidationError("empty search grid")
    if rankings is None:
        rankings = {}

    tasks = tqdm(list(enumerate(configs)), desc=f"{method} k={k}", disable=not progress)
    trace = Parallel(n_jobs=n_jobs, prefer="threads")(
        delayed(_evaluate_config)(i, config, train, folds, k, classifier, rankings) for i, config in tasks
    )

    scored = [entry for entry in trace if entry["mean"] is not None]
    if not scored:
        raise NumericalError(f"every {method} configuration failed")
    winner = min(scored, key=lambda e: (-e["mean"], e["config"].active_parameters(), e["index"]))
    best = winner["config"].with_k(k)
    logger.info("%s k=%d %s: best %s with cv balanced accuracy %.4f",
                method, k, classifier.kind, best, winner["mean"])
    return GridSearchResult(best=best, cv_score=winner["mean"], trace=trace)
