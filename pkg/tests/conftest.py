"""
Fixtures shared by multiple test modules.
"""

import logging
from pathlib import Path
import tempfile
import time
from typing import Generator, List

from faker import Faker
import pytest

from melonrep.graph_core import MelonSpec

# Bounds for random melon specs.
RANDOM_MAX_PARTS: int = 4
RANDOM_MAX_LENGTH: int = 5


FAKE = Faker()
# Seed random generator.
SEED = int(time.time() * 1000)  # Current time in ms.
FAKE.seed_instance(SEED)


def random_spec(
    max_parts: int = RANDOM_MAX_PARTS, max_length: int = RANDOM_MAX_LENGTH
) -> MelonSpec:
    """
    Random melon spec with at most one path of length 1.
    """
    parts = FAKE.random_int(min=1, max=max_parts)
    lengths: List[int] = []
    for _ in range(parts):
        low = 2 if 1 in lengths else 1
        lengths.append(FAKE.random_int(min=low, max=max_length))
    return MelonSpec(lengths)


@pytest.fixture
def melon_spec(request: pytest.FixtureRequest) -> Generator[MelonSpec, None, None]:
    """
    A random small melon spec; the seed is logged if a test failed.
    """
    yield random_spec()

    # If there are failed tests.
    if request.session.testsfailed:
        # Log seed.
        logging.warning("Seed for RNG: %s", SEED)


@pytest.fixture
def tmp_dir() -> Generator[Path, None, None]:
    """
    Temporary directory for input and output files.
    """
    with tempfile.TemporaryDirectory() as tmp:
        yield Path(tmp)
