import numpy as np
import pytest
from scipy.optimize import linear_sum_assignment

from nonhermitian.confined import assemble, spectrum


@pytest.fixture(scope="session")
def spectra():
    """Cached classified spectra keyed by (T, mu, N)."""
    cache = {}

    def get(T: float, mu: float, N: int):
        key = (T, mu, N)
        if key not in cache:
            cache[key] = spectrum(assemble(T, mu, N))
        return cache[key]

    return get


@pytest.fixture(scope="session")
def table1_model():
    return assemble(12.0, 1.0, 40)


@pytest.fixture
def rng():
    return np.random.default_rng(7)


def matched_difference(a, b) -> float:
    """Largest |a_i - b_j| over the optimal one-to-one pairing of two spectra."""
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    assert a.shape == b.shape
    rows, cols = linear_sum_assignment(np.abs(a[:, None] - b[None, :]))
    return float(np.max(np.abs(a[rows] - b[cols])))


@pytest.fixture
def spectral_distance():
    return matched_difference
