import numpy as np
import pytest


def random_complex(rng, n, scale=1.0):
    return scale * (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


J = np.array([[0, 1], [0, 0]], dtype=complex)
