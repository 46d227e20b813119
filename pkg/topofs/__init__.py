"""Top level package for :mod:`topofs`, topological feature selection.

Features become vertices of a Triangulated Maximally Filtered Graph built on a
similarity matrix; their degree ranks them. Infinite feature selection is
included as the reference filter, together with the evaluation harness that
compares the two.
"""

__version__ = "0.1.0"

from .dataset import FeatureMatrix, load_csv, make_latent_dataset
from .errors import DataError, NumericalError, TopoFSError, ValidationError
from .evaluation import ClassifierSpec, Pipeline, grid_search, paired_cv_ttest
from .experiment import Experiment, RunConfig, RunResult
from .selection import SelectionConfig, inffs_score, make_selector, tfs_rank, tfs_select
from .tmfg import TmfgGraph, build_tmfg

__all__ = [
    "ClassifierSpec",
    "DataError",
    "Experiment",
    "FeatureMatrix",
    "NumericalError",
    "Pipeline",
    "RunConfig",
    "RunResult",
    "SelectionConfig",
    "TmfgGraph",
    "TopoFSError",
    "ValidationError",
    "build_tmfg",
    "grid_search",
    "inffs_score",
    "load_csv",
    "make_latent_dataset",
    "make_selector",
    "paired_cv_ttest",
    "tfs_rank",
    "tfs_select",
]
