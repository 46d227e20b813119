"""Loading, splitting and preprocessing of tabular datasets."""

from .feature_matrix import FeatureMatrix
from .io import load_csv
from .preprocessing import (
    Standardizer,
    apply_standardizer,
    fit_standardizer,
    prune_constant_features,
)
from .splits import SplitResult, stratified_kfold, stratified_split
from .synthetic import make_latent_dataset

__all__ = [
    "FeatureMatrix",
    "SplitResult",
    "Standardizer",
    "apply_standardizer",
    "fit_standardizer",
    "load_csv",
    "make_latent_dataset",
    "prune_constant_features",
    "stratified_kfold",
    "stratified_split",
]
