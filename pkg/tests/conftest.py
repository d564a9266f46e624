import numpy as np
import pytest

from projline.subspace import TolerancePolicy


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def policy():
    return TolerancePolicy()
