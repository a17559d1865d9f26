import typing

from attrs import field, frozen

from scorecluster.exceptions import InvalidInputException
from scorecluster.models.band import PerformanceBand


@frozen
class ClusterPerformance:
    """
    One row of a per-k results table. Empty clusters carry size 0 and no overall/band.
    """
    cluster_index: int
    size: int
    overall: typing.Optional[float] = None
    band: typing.Optional[PerformanceBand] = None

    def __attrs_post_init__(self):
        if self.size < 0:
            raise InvalidInputException(f"Cluster {self.cluster_index} has a negative size")
        if (self.overall is None) != (self.size == 0):
            raise InvalidInputException(f"Cluster {self.cluster_index}: only empty clusters may omit the overall")
        if self.overall is not None and self.band is not PerformanceBand.containing(self.overall):
            raise InvalidInputException(f"Cluster {self.cluster_index}: band does not match overall {self.overall!r}")

    @property
    def empty(self) -> bool:
        return self.size == 0


@frozen
class DatasetStats:
    n_students: int
    n_courses: int
    overall: typing.Optional[float] = None


@frozen
class KResult:
    k: int
    converged: bool
    iterations: int
    mse: float
    clusters: typing.Tuple[ClusterPerformance, ...] = field(converter=tuple)
    mean_silhouette: typing.Optional[float] = None

    def __attrs_post_init__(self):
        indexes = [c.cluster_index for c in self.clusters]
        if indexes != sorted(indexes):
            raise InvalidInputException(f"Clusters for k={self.k} must be ordered by cluster index")


@frozen
class AnalysisReport:
    dataset_stats: DatasetStats
    per_k: typing.Tuple[KResult, ...] = field(converter=tuple)

    def __attrs_post_init__(self):
        ks = [entry.k for entry in self.per_k]
        if any(a >= b for a, b in zip(ks, ks[1:])):
            raise InvalidInputException("Report entries must be sorted by strictly increasing k")

        for entry in self.per_k:
            total = sum(c.size for c in entry.clusters)
            if total != self.dataset_stats.n_students:
                raise InvalidInputException(
                    f"Cluster sizes for k={entry.k} sum to {total}, expected {self.dataset_stats.n_students}"
                )

    def for_k(self, k: int) -> typing.Optional[KResult]:
        for entry in self.per_k:
            if entry.k == k:
                return entry

        return None
