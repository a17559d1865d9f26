import numpy as np
import pytest

from scorecluster.ingest import generate_synthetic


def blobs(centers, per_blob: int, spread: float, seed: int, interleave: bool = True) -> np.ndarray:
    """
    Points scattered uniformly within +/- spread of each centre. Interleaved rows put one point of every
    blob among the first len(centers) rows.
    """
    rng = np.random.default_rng(seed)
    centers = np.asarray(centers, dtype=np.float64)
    points = centers[:, np.newaxis, :] + rng.uniform(-spread, spread, size=(len(centers), per_blob, centers.shape[1]))
    if interleave:
        return points.transpose(1, 0, 2).reshape(-1, centers.shape[1])

    return points.reshape(-1, centers.shape[1])


@pytest.fixture
def six_points() -> np.ndarray:
    return np.array([[1.0, 1.0], [1.5, 2.0], [3.0, 4.0], [5.0, 7.0], [3.5, 5.0], [4.5, 5.0]])


@pytest.fixture
def separated_blobs() -> np.ndarray:
    return blobs([[20.0, 20.0], [80.0, 80.0]], per_blob=20, spread=3.0, seed=11)


@pytest.fixture
def overlapping_blobs() -> np.ndarray:
    return blobs([[50.0, 50.0], [51.0, 51.0]], per_blob=20, spread=3.0, seed=11)


@pytest.fixture(scope='session')
def three_band_matrix():
    """
    79 students, 9 courses, three groups centred on the Very Good / Good / Very Fair bands
    """
    return generate_synthetic(79, 9, 3, [62.0, 53.0, 46.0], 3.0, 7)
