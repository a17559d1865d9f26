import numpy as np
import pytest
from numpy.testing import assert_allclose

from scorecluster.exceptions import InvalidInputException
from scorecluster.kmeans import run_kmeans, silhouette_width
from scorecluster.models import KMeansConfig


def test_two_tight_pairs():
    widths, mean = silhouette_width([[0.0], [0.0], [10.0], [10.0]], [0, 0, 1, 1], 2)

    assert widths.tolist() == [1.0, 1.0, 1.0, 1.0]
    assert mean == 1.0


def test_identical_points_score_zero():
    widths, mean = silhouette_width([[3.0, 3.0]] * 4, [0, 1, 0, 1], 2)

    assert widths.tolist() == [0.0, 0.0, 0.0, 0.0]
    assert mean == 0.0


def test_singletons_score_zero():
    widths, _ = silhouette_width([[0.0], [1.0], [10.0]], [0, 0, 1], 2)

    assert widths[2] == 0.0
    assert widths[0] > 0


def test_plain_euclidean_distance_is_used():
    # a(0) = 1, b(0) = mean(3, 5) = 4 with plain distances; squared would give 1 and 17
    widths, _ = silhouette_width([[0.0], [1.0], [3.0], [5.0]], [0, 0, 1, 1], 2)
    assert widths[0] == pytest.approx(0.75)


def test_needs_two_clusters():
    with pytest.raises(InvalidInputException):
        silhouette_width([[0.0], [1.0]], [0, 0], 1)


def test_needs_two_populated_clusters():
    with pytest.raises(InvalidInputException):
        silhouette_width([[0.0], [1.0]], [0, 0], 2)


def test_separated_blobs_beat_overlapping_blobs(separated_blobs, overlapping_blobs):
    separated = run_kmeans(separated_blobs, KMeansConfig(k=2, init='first'))
    overlapping = run_kmeans(overlapping_blobs, KMeansConfig(k=2, init='first'))

    _, separated_mean = silhouette_width(separated_blobs, separated.assignments, 2)
    _, overlapping_mean = silhouette_width(overlapping_blobs, overlapping.assignments, 2)

    assert separated_mean > 0.7
    assert overlapping_mean < separated_mean


def test_values_stay_within_bounds():
    rng = np.random.default_rng(17)
    for _ in range(200):
        n = int(rng.integers(2, 40))
        k = int(rng.integers(2, min(5, n) + 1))
        data = rng.uniform(0, 100, size=(n, int(rng.integers(1, 4))))
        assignments = rng.integers(0, k, size=n)
        if np.unique(assignments).size < 2:
            assignments[:2] = [0, 1]

        widths, mean = silhouette_width(data, assignments, k)
        assert np.all(widths >= -1.0) and np.all(widths <= 1.0)
        assert -1.0 <= mean <= 1.0


def test_agrees_with_scikit_learn():
    metrics = pytest.importorskip('sklearn.metrics')
    rng = np.random.default_rng(3)
    for _ in range(20):
        data = rng.uniform(0, 100, size=(30, 3))
        assignments = np.arange(30) % 3
        rng.shuffle(assignments)

        widths, mean = silhouette_width(data, assignments, 3)
        assert_allclose(widths, metrics.silhouette_samples(data, assignments), atol=1e-9)
        assert mean == pytest.approx(metrics.silhouette_score(data, assignments))
