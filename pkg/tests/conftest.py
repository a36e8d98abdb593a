import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from isprings.corpus import load_corpus

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def small_rings(corpus):
    return [R for _, R in corpus if R.size <= 16]
