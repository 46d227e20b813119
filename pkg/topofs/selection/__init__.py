"""Feature selection: topological (tfs) and infinite feature selection (inffs)."""

from ..errors import ValidationError
from .config import METHODS, SelectionConfig
from .inffs import (
    InfFSSelector,
    inffs_score,
    inffs_scores_from_adjacency,
    inffs_select,
    spectral_radius,
)
from .ranking import FeatureRanking
from .selector import Selector
from .tfs import TFSSelector, tfs_rank, tfs_select


def make_selector(config: SelectionConfig) -> Selector:
    if config.method == "tfs":
        return TFSSelector.from_config(config)
    if config.method == "inffs":
        return InfFSSelector.from_config(config)
    raise ValidationError(f"unknown method {config.method!r}")


__all__ = [
    "METHODS",
    "FeatureRanking",
    "InfFSSelector",
    "SelectionConfig",
    "Selector",
    "TFSSelector",
    "inffs_score",
    "inffs_scores_from_adjacency",
    "inffs_select",
    "make_selector",
    "spectral_radius",
    "tfs_rank",
    "tfs_select",
]
