import random

import pytest
from hypothesis import HealthCheck, settings

from cayley_octads.geometry.sampling import SamplerConfig, sample_octads

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def octads():
    """Regular octads from the perturbed-cube sampler (fixed seed)."""
    return list(sample_octads(6, SamplerConfig(seed=11)))


@pytest.fixture
def rng():
    return random.Random(1234)
