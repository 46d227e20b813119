import logging
from typing import Optional, Tuple

import numpy as np

from ..dataset.feature_matrix import FeatureMatrix
from ..errors import ValidationError
from ..similarity import SimilarityMatrix, compute_similarity
from ..tmfg import TmfgGraph, build_tmfg, degree_centrality
from .config import SelectionConfig
from .ranking import FeatureRanking
from .selector import Selector

logger = logging.getLogger(__name__)


class TFSSelector(Selector):
    """Rank features by their degree in the TMFG built on a similarity matrix."""

    def __init__(self, metric: str, squared: bool = False, alpha: Optional[float] = None):
        # Validates the combination of options.
        self.config = SelectionConfig(method="tfs", metric=metric, squared=squared, alpha=alpha)

    @classmethod
    def from_config(cls, config: SelectionConfig) -> "TFSSelector":
        if config.method != "tfs":
            raise ValidationError(f"expected a tfs configuration, got method {config.method!r}")
        return cls(metric=config.metric, squared=config.squared, alpha=config.alpha)

    def build_graph(self, X: FeatureMatrix) -> Tuple[SimilarityMatrix, TmfgGraph]:
        if X.n_features < 4:
            raise ValidationError(f"tfs needs at least 4 features, got {X.n_features}")
        similarity = compute_similarity(X, self.config.metric, self.config.squared, self.config.alpha)
        return similarity, build_tmfg(similarity)

    def rank(self, X: FeatureMatrix) -> FeatureRanking:
        _, graph = self.build_graph(X)
        return FeatureRanking.from_scores(degree_centrality(graph))


def tfs_rank(X: FeatureMatrix, config: SelectionConfig) -> FeatureRanking:
    return TFSSelector.from_config(config).rank(X)


def tfs_select(X: FeatureMatrix, config: SelectionConfig) -> np.ndarray:
    if config.k is None:
        raise ValidationError("the configuration has no cardinality k")
    return tfs_rank(X, config).top(config.k)
