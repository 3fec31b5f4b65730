from collections.abc import Generator
from typing import Any

import numpy as np
import pytest

from src.anticonc.core.config import settings
from src.anticonc.core.rng import Rng
from src.anticonc.stats.sample import ProbSample
from tests.helpers.generators import haar_overlap_values, write_sample_csv
from tests.test_config import test_settings


@pytest.fixture
def rng() -> Rng:
    """Fresh stream on the shared test seed."""
    return Rng(test_settings.TEST_SEED)


@pytest.fixture(params=test_settings.TEST_PROPERTY_SEEDS)
def seeded_rng(request) -> Rng:
    """One stream per property seed."""
    return Rng(request.param)


@pytest.fixture
def out_dir(tmp_path) -> str:
    return str(tmp_path / "out")


@pytest.fixture
def haar_sample() -> ProbSample:
    """|U_00|^2 of 4000 Haar unitaries of dimension 8."""
    return ProbSample(haar_overlap_values(8, test_settings.TEST_TRIALS, Rng(test_settings.TEST_SEED)), 8)


@pytest.fixture
def sample_csv(tmp_path) -> str:
    return write_sample_csv(str(tmp_path / "samples.csv"), n=3, trials=500, seed=test_settings.TEST_SEED)


@pytest.fixture
def restore_settings() -> Generator[Any, Any, None]:
    """Snapshot mutable settings and restore them after the test."""
    snapshot = settings.model_dump()
    yield settings
    for key, value in snapshot.items():
        setattr(settings, key, value)


@pytest.fixture
def sample_distribution() -> np.ndarray:
    return np.array([0.5, 0.25, 0.125, 0.125])
