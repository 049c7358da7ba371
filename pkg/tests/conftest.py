import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from cubical.interval import interval_algebra

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(params=[0, 1, 2], ids=lambda n: f"B{n}")
def small(request):
    return interval_algebra(request.param)


@pytest.fixture
def b1():
    return interval_algebra(1)


@pytest.fixture
def b2():
    return interval_algebra(2)
