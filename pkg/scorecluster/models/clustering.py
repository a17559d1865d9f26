import enum
import typing

import numpy as np
from attrs import field, frozen

from scorecluster.exceptions import InternalConsistencyException, InvalidConfigurationException
from scorecluster.lang import lang
from scorecluster.models._arrays import array_eq, readonly_array

MAX_SEED = 2 ** 64


class InitStrategy(enum.Enum):
    FIRST_K = 'first'
    RANDOM_SAMPLE = 'random'


class EmptyClusterPolicy(enum.Enum):
    # Empty clusters collapse to the zero vector
    FAITHFUL = 'faithful'
    # Empty clusters are re-seeded from the point farthest from its centroid
    ROBUST = 'robust'


def _enum(enum_cls):
    def _convert(value):
        try:
            return enum_cls(value)
        except ValueError as e:
            raise InvalidConfigurationException(f"Unknown {enum_cls.__name__} value: {value!r}") from e

    return _convert


def _check_k(instance, attribute, value):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
        raise InvalidConfigurationException(lang('KMeans', 'k_zero', {'k': value}))


def _check_seed(instance, attribute, value):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or not 0 <= value < MAX_SEED:
        raise InvalidConfigurationException(lang('KMeans', 'bad_seed', {'seed': value}))


def _check_max_iterations(instance, attribute, value):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
        raise InvalidConfigurationException(lang('KMeans', 'bad_max_iterations', {'max_iterations': value}))


@frozen
class KMeansConfig:
    k: int = field(validator=_check_k)
    init: InitStrategy = field(default=InitStrategy.RANDOM_SAMPLE, converter=_enum(InitStrategy))
    seed: int = field(default=0, validator=_check_seed)
    max_iterations: int = field(default=300, validator=_check_max_iterations)
    empty_cluster_policy: EmptyClusterPolicy = field(default=EmptyClusterPolicy.ROBUST, converter=_enum(EmptyClusterPolicy))


@frozen
class ClusterModel:
    """
    Result of a k-means run.

    `sse` and `mse` are measured against the final centroids, while `trace` holds the SSE of every
    assignment pass measured against the centroids that pass started from.
    """
    centroids: np.ndarray = field(converter=readonly_array(np.float64), eq=array_eq)
    assignments: np.ndarray = field(converter=readonly_array(np.intp), eq=array_eq)
    iterations: int
    sse: float
    mse: float
    converged: bool = True
    trace: typing.Tuple[float, ...] = field(default=(), converter=tuple)

    def __attrs_post_init__(self):
        k = self.centroids.shape[0]
        if self.assignments.size and (self.assignments.min() < 0 or self.assignments.max() >= k):
            raise InternalConsistencyException(f"Cluster assignments must lie in [0, {k})")

    @property
    def k(self) -> int:
        return self.centroids.shape[0]

    @property
    def n(self) -> int:
        return self.assignments.shape[0]

    def sizes(self) -> np.ndarray:
        """
        Member count per cluster index, empty clusters included
        """
        return np.bincount(self.assignments, minlength=self.k)

    def members(self, cluster_index: int) -> np.ndarray:
        """
        Row indices assigned to the given cluster
        """
        return np.flatnonzero(self.assignments == cluster_index)
