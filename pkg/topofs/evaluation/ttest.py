import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import stats

from ..dataset.feature_matrix import FeatureMatrix
from ..dataset.splits import stratified_split
from ..errors import ValidationError
from .pipeline import Pipeline

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TTestResult:
    """
    Paired t-test over matched score differences.

    ``degenerate`` is None for a regular result, "zero variance" when every difference
    is equal to a zero mean, and "infinite statistic" when the differences are constant
    and nonzero.
    """
    t_statistic: float
    degrees_of_freedom: int
    p_value: float
    differences: np.ndarray
    degenerate: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "t_statistic": self.t_statistic,
            "degrees_of_freedom": self.degrees_of_freedom,
            "p_value": self.p_value,
            "differences": self.differences.tolist(),
            "degenerate": self.degenerate,
        }


def paired_ttest(differences) -> TTestResult:
    """
    t = sqrt(m) * mean(d) / sigma with sigma the population standard deviation of the
    m differences, compared against a t distribution with m - 1 degrees of freedom.
    """
    d = np.asarray(differences, dtype=np.float64)
    if d.ndim != 1 or d.size < 2:
        raise ValidationError(f"need at least two differences, got {d.size}")
    if not np.all(np.isfinite(d)):
        raise ValidationError("differences must be finite")
    m = d.size
    mean = float(np.mean(d))
    sigma = float(np.std(d))
    df = m - 1

    if sigma == 0.0:
        if mean == 0.0:
            logger.warning("all differences are zero, the t-test is degenerate")
            return TTestResult(0.0, df, 1.0, d, degenerate="zero variance")
        logger.warning("constant nonzero differences, the t statistic is infinite")
        return TTestResult(float(np.copysign(np.inf, mean)), df, 0.0, d, degenerate="infinite statistic")

    t = float(np.sqrt(m) * mean / sigma)
    p = float(min(1.0, 2.0 * stats.t.sf(abs(t), df)))
    return TTestResult(t, df, p, d)


def paired_cv_ttest(pipeline_a: Pipeline,
                    pipeline_b: Pipeline,
                    data: FeatureMatrix,
                    repetitions: int = 15,
                    seed: int = 0) -> TTestResult:
    """
    Repeated two-fold paired t-test between two pipelines.

    Each repetition splits ``data`` into stratified halves with seed ``seed + repetition``
    and scores both pipelines trained on either half and tested on the other, giving
    ``2 * repetitions`` balanced accuracy differences ``a - b``.
    """
    if repetitions < 2:
        raise ValidationError(f"repetitions must be at least 2, got {repetitions}")
    differences = []
    for rep in range(repetitions):
        split = stratified_split(data, 0.5, seed=seed + rep)
        first = data.take_samples(split.train_indices)
        second = data.take_samples(split.test_indices)
        for train, test in ((first, second), (second, first)):
            a = pipeline_a.score(train, test)
            b = pipeline_b.score(train, test)
            differences.append(a - b)
        logger.debug("repetition %d: differences %s", rep, differences[-2:])
    result = paired_ttest(differences)
    logger.info("paired t-test over %d folds: t=%.6g, p=%.6g", len(differences), result.t_statistic, result.p_value)
    return result
