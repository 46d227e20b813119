from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import ValidationError

METRICS = ("pearson", "spearman", "energy")


@dataclass(frozen=True, eq=False)
class SimilarityMatrix:
    """
    Symmetric n x n similarity matrix together with how it was computed.

    ``alpha`` is only set for the energy metric; ``squared`` is never set for it.
    """
    values: np.ndarray
    metric: str
    squared: bool = False
    alpha: Optional[float] = None

    def __post_init__(self):
        if self.metric not in METRICS:
            raise ValidationError(f"unknown metric {self.metric!r}, expected one of {METRICS}")
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise ValidationError(f"similarity matrix must be square, got shape {values.shape}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return self.values.shape[0]


def symmetric_from_upper(values: np.ndarray, diagonal: float) -> np.ndarray:
    """Mirror the strict upper triangle so that ``out[i, j] == out[j, i]`` bit for bit."""
    upper = np.triu(values, 1)
    out = upper + upper.T
    np.fill_diagonal(out, diagonal)
    return out


def apply_square(similarity: SimilarityMatrix) -> SimilarityMatrix:
    """Square every entry of a pearson or spearman matrix. Energy matrices are never squared."""
    if similarity.metric == "energy":
        raise ValidationError("the energy metric is never squared")
    if similarity.squared:
        raise ValidationError("similarity matrix is already squared")
    return SimilarityMatrix(
        values=np.square(similarity.values),
        metric=similarity.metric,
        squared=True,
    )
