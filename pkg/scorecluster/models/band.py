import enum
import math

from scorecluster.lang import lang


class PerformanceBand(enum.Enum):
    """
    Qualitative performance index. Members partition [0, inf) into half-open [lower, upper) intervals.
    """
    EXCELLENT = ('excellent', 70.0, math.inf)
    VERY_GOOD = ('very_good', 60.0, 70.0)
    GOOD = ('good', 50.0, 60.0)
    VERY_FAIR = ('very_fair', 45.0, 50.0)
    FAIR = ('fair', 40.0, 45.0)
    POOR = ('poor', 0.0, 40.0)

    def __init__(self, key: str, lower: float, upper: float):
        self.key = key
        self.lower = lower
        self.upper = upper

    @property
    def label(self) -> str:
        return lang('Bands', self.key, default=self.key.replace('_', ' ').title())

    @property
    def rank(self) -> int:
        """
        0 for Poor up to 5 for Excellent
        """
        return len(PerformanceBand) - 1 - list(PerformanceBand).index(self)

    def contains(self, value: float) -> bool:
        return self.lower <= value < self.upper

    @classmethod
    def containing(cls, value: float) -> 'PerformanceBand':
        for band in cls:
            if band.contains(value):
                return band

        raise ValueError(f"No performance band contains {value!r}")

    @classmethod
    def from_label(cls, label: str) -> 'PerformanceBand':
        """
        Reverse lookup by display label ("Very Good") or member name ("VERY_GOOD")
        """
        for band in cls:
            if label in (band.label, band.name):
                return band

        raise ValueError(f"Unknown performance band: {label!r}")
