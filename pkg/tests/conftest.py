import os
import random

import pytest

SEED = int(os.environ.get("FIBLANG_SEED", "0"))

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


@pytest.fixture
def rng():
    return random.Random(SEED)


@pytest.fixture
def fixtures_dir():
    return FIXTURES
