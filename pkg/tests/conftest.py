"""Shared test configuration: fixed precision and a calm hypothesis profile."""

import pytest
from hypothesis import HealthCheck, settings
from mpmath import mp

settings.register_profile(
    "default",
    deadline=None,
    max_examples=25,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# raised before test modules import, so their literal constants parse fully
mp.dps = 25


@pytest.fixture(autouse=True)
def working_precision():
    """Every test starts from the package default of 25 significant digits."""
    saved = mp.dps
    mp.dps = 25
    yield
    mp.dps = saved
