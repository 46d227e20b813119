"""Classifiers used to score selected feature subsets."""

from .classifier import Classifier
from .decision_tree import DecisionTreeClassifier
from .knn import KNeighborsClassifier
from .linear_svm import LinearSVMClassifier
from .spec import CLASSIFIERS, ClassifierSpec, fit_predict

__all__ = [
    "CLASSIFIERS",
    "Classifier",
    "ClassifierSpec",
    "DecisionTreeClassifier",
    "KNeighborsClassifier",
    "LinearSVMClassifier",
    "fit_predict",
]
