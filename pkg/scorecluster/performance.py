import logging
import math
import typing

import numpy as np

from scorecluster.exceptions import DimensionMismatchException, InvalidInputException
from scorecluster.kmeans import Points, as_points
from scorecluster.models import ClusterModel, ClusterPerformance, PerformanceBand

_log = logging.getLogger(__name__)


def overall_performance(members: Points) -> float:
    """
    Group assessment of a cluster: the mean over its N students of each student's mean score
    Args:
        members (Points): N x n scores of the students in one cluster

    Returns:
        float
    """
    try:
        scores = as_points(members)
    except InvalidInputException as e:
        raise InvalidInputException(f"Cannot evaluate the overall performance of an empty or malformed cluster: {e}") from e

    return float(np.mean(np.mean(scores, axis=1)))


def band_of(overall: float) -> PerformanceBand:
    """
    Looks up the performance index band containing a score
    Raises:
        InvalidInputException: For negative or non-finite scores
    """
    try:
        value = float(overall)
    except (TypeError, ValueError) as e:
        raise InvalidInputException(f"Not a number: {overall!r}") from e

    if not math.isfinite(value) or value < 0:
        raise InvalidInputException(f"Performance must be a finite, non-negative number, got {overall!r}")

    return PerformanceBand.containing(value)


def evaluate_clusters(data: Points, model: ClusterModel) -> typing.List[ClusterPerformance]:
    """
    Overall performance and band of every cluster, ordered by cluster index.

    Empty clusters are included with size 0 and no overall or band.
    Returns:
        typing.List[ClusterPerformance]
    """
    scores = as_points(data)
    if model.n != scores.shape[0]:
        raise DimensionMismatchException(
            model.n, scores.shape[0], f"Model has {model.n} assignments but the data has {scores.shape[0]} rows"
        )

    results = []
    for cluster_index, size in enumerate(model.sizes()):
        if not size:
            _log.debug(f"Cluster {cluster_index} is empty; no overall performance")
            results.append(ClusterPerformance(cluster_index=cluster_index, size=0))
            continue

        overall = overall_performance(scores[model.members(cluster_index)])
        results.append(
            ClusterPerformance(cluster_index=cluster_index, size=int(size), overall=overall, band=band_of(overall))
        )

    return results
