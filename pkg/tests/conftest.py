import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_pure_state(rng, dims):
    from tritangle import StateVector, SubsystemLayout

    layout = SubsystemLayout(tuple(dims))
    amp = rng.normal(size=layout.total_dim) + 1j * rng.normal(size=layout.total_dim)
    amp /= np.linalg.norm(amp)
    return StateVector(layout, amp)
