from dataclasses import asdict, dataclass
from typing import Optional, Tuple

from ..errors import ValidationError
from ..similarity.matrix import METRICS

METHODS = ("tfs", "inffs")


@dataclass(frozen=True)
class SelectionConfig:
    """
    Hyper-parameters of one feature selection run.

    tfs uses ``metric`` and ``squared``, plus ``alpha`` for the energy metric only.
    inffs uses ``alpha`` and ``theta``. ``k`` is the number of features to keep.
    """
    method: str
    metric: Optional[str] = None
    squared: bool = False
    alpha: Optional[float] = None
    theta: Optional[float] = None
    k: Optional[int] = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValidationError(f"unknown method {self.method!r}, expected one of {METHODS}")
        if self.method == "tfs":
            if self.metric not in METRICS:
                raise ValidationError(f"tfs needs a metric in {METRICS}, got {self.metric!r}")
            if self.metric == "energy" and self.squared:
                raise ValidationError("invalid configuration: the energy metric is never squared")
            if (self.alpha is not None) != (self.metric == "energy"):
                raise ValidationError("alpha is required with the energy metric and not allowed otherwise")
            if self.theta is not None:
                raise ValidationError("theta only applies to inffs")
        else:
            if self.metric is not None or self.squared:
                raise ValidationError("inffs takes no metric or square option")
            if self.alpha is None or self.theta is None:
                raise ValidationError("inffs needs both alpha and theta")
        if self.alpha is not None and not 0.0 <= self.alpha <= 1.0:
            raise ValidationError(f"alpha must lie in [0, 1], got {self.alpha}")
        if self.theta is not None and not 0.0 < self.theta <= 1.0:
            raise ValidationError(f"theta must lie in (0, 1], got {self.theta}")
        if self.k is not None and (isinstance(self.k, bool) or int(self.k) != self.k or self.k < 1):
            raise ValidationError(f"k must be a positive integer, got {self.k}")

    def active_parameters(self) -> int:
        """Number of hyper-parameters that shape the selection; fewer wins grid ties."""
        count = 0
        if self.metric is not None:
            count += 1
        if self.squared:
            count += 1
        if self.alpha is not None:
            count += 1
        if self.theta is not None:
            count += 1
        return count

    def ranking_key(self) -> Tuple:
        # Everything except k: rankings do not depend on the cardinality.
        return (self.method, self.metric, self.squared, self.alpha, self.theta)

    def with_k(self, k: int) -> "SelectionConfig":
        return SelectionConfig(self.method, self.metric, self.squared, self.alpha, self.theta, k)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, content: dict) -> "SelectionConfig":
        known = {"method", "metric", "squared", "alpha", "theta", "k"}
        unknown = set(content) - known
        if unknown:
            raise ValidationError(f"unknown selection options: {sorted(unknown)}")
        return cls(**content)
