import numpy as np
import pytest

from liealg.algebras import get_algebra
from resources.config import get_configs

config = get_configs()


@pytest.fixture
def sl2():
    return get_algebra('sl', 2)


@pytest.fixture
def sl3():
    return get_algebra('sl', 3)


@pytest.fixture
def rng():
    return np.random.default_rng(config.seed)


@pytest.fixture
def samples():
    return config.property_samples
