"""
Traditional k-means (Lloyd iteration) over score matrices.

Distances are squared Euclidean. Every routine takes either a ScoreMatrix or a plain 2-d array-like,
so callers can cluster arbitrary finite data; the [0, 100] score range is only enforced by ScoreMatrix.
"""
import itertools
import logging
import math
import typing

import numpy as np
from scipy.spatial.distance import cdist

from scorecluster.exceptions import DimensionMismatchException, InternalConsistencyException, \
    InvalidConfigurationException, InvalidInputException
from scorecluster.lang import lang
from scorecluster.models import ClusterModel, EmptyClusterPolicy, InitStrategy, KMeansConfig, ScoreMatrix

_log = logging.getLogger(__name__)

Points = typing.Union[ScoreMatrix, np.ndarray, typing.Sequence[typing.Sequence[float]]]

# Largest n the brute-force oracle will enumerate
BRUTE_FORCE_LIMIT = 12


def as_points(data: Points) -> np.ndarray:
    """
    Coerces input data to an (n, d) float64 array of finite values
    Args:
        data (Points): A ScoreMatrix or 2-d array-like

    Returns:
        np.ndarray
    """
    if isinstance(data, ScoreMatrix):
        return data.rows

    try:
        points = np.asarray(data, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise InvalidInputException(f"Data points must form a rectangular numeric matrix: {e}") from e

    if points.ndim != 2:
        raise InvalidInputException(f"Data points must form a two dimensional matrix, got {points.ndim} dimension(s)")
    if points.shape[0] < 1:
        raise InvalidInputException("The dataset is empty")
    if points.shape[1] < 1:
        raise InvalidInputException("Data points need at least one coordinate")
    if not np.all(np.isfinite(points)):
        raise InvalidInputException("Data points must be finite")

    return points


def _as_centroids(centroids, dimension: int) -> np.ndarray:
    centroids = np.asarray(centroids, dtype=np.float64)
    if centroids.ndim != 2 or centroids.shape[0] < 1:
        raise InvalidInputException("At least one centroid is required")
    if centroids.shape[1] != dimension:
        raise DimensionMismatchException(
            centroids.shape[1], dimension,
            f"Centroid dimension {centroids.shape[1]} does not match data dimension {dimension}"
        )
    if not np.all(np.isfinite(centroids)):
        raise InvalidInputException("Centroids must be finite")

    return centroids


def squared_euclidean_distance(a: typing.Sequence[float], b: typing.Sequence[float]) -> float:
    """
    Sum of squared coordinate differences between two points
    Raises:
        InvalidInputException: If either point is not a flat sequence of numbers
        DimensionMismatchException: If the points have different lengths
    """
    try:
        a = np.asarray(a, dtype=np.float64)
        b = np.asarray(b, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise InvalidInputException(f"Points must be numeric: {e}") from e
    if a.ndim != 1 or b.ndim != 1:
        raise InvalidInputException(f"Points must be one dimensional, got {a.ndim} and {b.ndim} dimension(s)")
    if a.shape != b.shape:
        raise DimensionMismatchException(a.size, b.size, f"Cannot compare points of length {a.size} and {b.size}")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise InvalidInputException("Coordinates must be finite")

    diff = a - b
    return float(np.dot(diff, diff))


def squared_distances(data: Points, centroids) -> np.ndarray:
    """
    (n, k) matrix of squared Euclidean distances from every point to every centroid
    """
    points = as_points(data)
    centroids = _as_centroids(centroids, points.shape[1])

    # Explicit differences rather than |x|^2 + |c|^2 - 2x.c keeps exact zeros for coincident points
    diff = points[:, np.newaxis, :] - centroids[np.newaxis, :, :]
    return np.einsum('nkd,nkd->nk', diff, diff)


def initialize_centroids(data: Points, config: KMeansConfig) -> np.ndarray:
    """
    Picks the starting centroids.

    FIRST_K copies rows 0..k-1. RANDOM_SAMPLE draws k distinct rows with numpy's PCG64 generator
    seeded from config.seed, so the same seed and data always yield the same rows.
    Returns:
        np.ndarray: (k, d) array of centroids
    """
    points = as_points(data)
    n = points.shape[0]
    _check_k(config.k, n)

    if config.init is InitStrategy.FIRST_K:
        return points[:config.k].copy()

    rng = np.random.default_rng(config.seed)
    chosen = rng.choice(n, size=config.k, replace=False)
    _log.debug(f"Random sample of {config.k} initial centroids (seed {config.seed}): rows {chosen.tolist()}")
    return points[chosen].copy()


def assign_points(data: Points, centroids) -> typing.Tuple[np.ndarray, float]:
    """
    Maps every point to its nearest centroid, ties going to the lowest centroid index
    Args:
        data (Points):
        centroids: (k, d) centroids to measure against

    Returns:
        typing.Tuple[np.ndarray, float]: The assignments, and the sum of the attained squared distances
    """
    distances = squared_distances(data, centroids)
    assignments = np.argmin(distances, axis=1)
    sse = float(distances[np.arange(distances.shape[0]), assignments].sum())
    return assignments, sse


def update_centroids(data: Points, assignments, k: int, policy: EmptyClusterPolicy, previous) -> np.ndarray:
    """
    Recomputes every centroid as the mean of its members.

    Empty clusters depend on the policy. FAITHFUL leaves the zero vector behind (a reset accumulator
    divided by max(n_j, 1)). ROBUST moves the point farthest from its current centroid into the empty
    cluster, taking it out of its donor's mean for this update. Only clusters with two or more members
    donate, equally distant candidates resolve to the highest row index, and empty clusters are filled
    in index order.
    Args:
        data (Points):
        assignments: Cluster index per point
        k (int): Number of clusters
        policy (EmptyClusterPolicy):
        previous: The (k, d) centroids the assignments were made against

    Returns:
        np.ndarray: (k, d) array of new centroids
    """
    points = as_points(data)
    n, d = points.shape
    previous = _as_centroids(previous, d)
    assignments = np.asarray(assignments, dtype=np.intp)
    policy = EmptyClusterPolicy(policy)

    if previous.shape[0] != k:
        raise InternalConsistencyException(f"Expected {k} previous centroids, got {previous.shape[0]}")
    if assignments.shape != (n,):
        raise InternalConsistencyException(f"Expected {n} assignments, got {assignments.size}")
    if n and (assignments.min() < 0 or assignments.max() >= k):
        raise InternalConsistencyException(f"Assignment index outside [0, {k}): {assignments.min()}..{assignments.max()}")

    # Separate accumulators; the previous centroids are never touched mid-update
    sums = np.zeros((k, d), dtype=np.float64)
    np.add.at(sums, assignments, points)
    counts = np.bincount(assignments, minlength=k)

    empty = np.flatnonzero(counts == 0)
    if empty.size and policy is EmptyClusterPolicy.ROBUST:
        residuals = np.einsum('nd,nd->n', points - previous[assignments], points - previous[assignments])
        taken = np.zeros(n, dtype=bool)
        for j in empty:
            candidates = (counts[assignments] >= 2) & ~taken
            if not candidates.any():
                _log.warning(f"No donor available to re-seed empty cluster {j}")
                continue

            scores = np.where(candidates, residuals, -np.inf)
            # argmax on the reversed array gives the highest index among ties
            donor_point = n - 1 - int(np.argmax(scores[::-1]))
            donor = assignments[donor_point]
            sums[donor] -= points[donor_point]
            counts[donor] -= 1
            sums[j] = points[donor_point]
            counts[j] = 1
            taken[donor_point] = True
            _log.debug(f"Re-seeded empty cluster {j} with row {donor_point} taken from cluster {donor}")

    return sums / np.maximum(counts, 1)[:, np.newaxis]


def run_kmeans(data: Points, config: KMeansConfig) -> ClusterModel:
    """
    Runs assign/update passes until the SSE of an assignment pass fails to drop strictly below the
    previous pass's SSE, or until config.max_iterations passes have run.

    The returned assignments, sse and mse are recomputed against the final centroids; the per-pass SSE
    values are kept in the model's trace.
    Returns:
        ClusterModel
    """
    points = as_points(data)
    n = points.shape[0]
    _check_k(config.k, n)

    centroids = initialize_centroids(points, config)
    previous_sse = math.inf
    trace = []
    iterations = 0
    converged = False

    while iterations < config.max_iterations:
        iterations += 1
        assignments, sse = assign_points(points, centroids)
        trace.append(sse)
        centroids = update_centroids(points, assignments, config.k, config.empty_cluster_policy, centroids)
        _log.debug(f"[k={config.k}] Iteration {iterations}: SSE {sse!r}")

        if not sse < previous_sse:
            converged = True
            break
        previous_sse = sse

    if not converged:
        _log.info(f"[k={config.k}] Stopped after the maximum of {config.max_iterations} iterations")

    assignments, sse = assign_points(points, centroids)
    _log.info(f"[k={config.k}] Finished after {iterations} iteration(s) with SSE {sse:.6f}")

    return ClusterModel(
        centroids=centroids,
        assignments=assignments,
        iterations=iterations,
        sse=sse,
        mse=sse / n,
        converged=converged,
        trace=trace,
    )


def silhouette_width(data: Points, assignments, k: int) -> typing.Tuple[np.ndarray, float]:
    """
    Silhouette width of a clustering, using plain (not squared) Euclidean distance.

    s(i) = (b(i) - a(i)) / max(a(i), b(i)), where a(i) is the mean distance to the other members of the
    point's own cluster and b(i) the smallest mean distance to the members of another cluster. Points
    in singleton clusters, and points where a(i) = b(i) = 0, score 0. Clusters without members are
    ignored.
    Returns:
        typing.Tuple[np.ndarray, float]: Per-point widths and their mean
    """
    if k < 2:
        raise InvalidInputException(f"Silhouette width needs at least two clusters, got k={k}")

    points = as_points(data)
    n = points.shape[0]
    assignments = np.asarray(assignments, dtype=np.intp)
    if assignments.shape != (n,):
        raise DimensionMismatchException(assignments.size, n, f"Got {assignments.size} assignments for {n} points")
    if assignments.min() < 0 or assignments.max() >= k:
        raise InvalidInputException(f"Assignment index outside [0, {k})")

    populated = np.flatnonzero(np.bincount(assignments, minlength=k))
    if populated.size < 2:
        raise InvalidInputException("Silhouette width needs at least two non-empty clusters")

    distances = cdist(points, points, metric='euclidean')
    # membership[i, c] is True when point i belongs to populated cluster c
    membership = (assignments[:, np.newaxis] == populated[np.newaxis, :]).astype(np.float64)
    sizes = membership.sum(axis=0)
    totals = distances @ membership

    own = np.searchsorted(populated, assignments)
    own_sizes = sizes[own]
    rows = np.arange(n)

    with np.errstate(divide='ignore', invalid='ignore'):
        a = np.where(own_sizes > 1, totals[rows, own] / np.maximum(own_sizes - 1, 1), 0.0)
        means = totals / sizes[np.newaxis, :]
        means[rows, own] = np.inf
        b = means.min(axis=1)
        denominator = np.maximum(a, b)
        widths = np.where(denominator > 0, (b - a) / np.where(denominator > 0, denominator, 1.0), 0.0)

    widths = np.where(own_sizes > 1, widths, 0.0)
    widths = np.clip(widths, -1.0, 1.0)
    return widths, float(widths.mean())


def brute_force_sse(data: Points, k: int) -> typing.Tuple[float, np.ndarray]:
    """
    Global minimum SSE over every labelling of the points into at most k clusters, each cluster
    represented by its mean. Exponential in n; limited to BRUTE_FORCE_LIMIT points.
    Returns:
        typing.Tuple[float, np.ndarray]: The minimum SSE and one labelling attaining it
    """
    points = as_points(data)
    n = points.shape[0]
    _check_k(k, n)
    if n > BRUTE_FORCE_LIMIT:
        raise InvalidInputException(f"Brute force enumeration is limited to {BRUTE_FORCE_LIMIT} points, got {n}")

    best_sse = math.inf
    best_labels = None
    for labels in itertools.product(range(k), repeat=n):
        # Fixing the first label to 0 skips labellings that only differ by renaming
        if labels[0] != 0:
            break

        labels = np.asarray(labels, dtype=np.intp)
        counts = np.bincount(labels, minlength=k)
        sums = np.zeros((k, points.shape[1]))
        np.add.at(sums, labels, points)
        means = sums / np.maximum(counts, 1)[:, np.newaxis]
        residual = points - means[labels]
        sse = float(np.einsum('nd,nd->', residual, residual))
        if sse < best_sse:
            best_sse, best_labels = sse, labels

    return best_sse, best_labels


def _check_k(k: int, n: int) -> None:
    if k < 1:
        raise InvalidConfigurationException(lang('KMeans', 'k_zero', {'k': k}))
    if k > n:
        raise InvalidConfigurationException(lang('KMeans', 'k_exceeds_n', {'k': k, 'n': n}))
