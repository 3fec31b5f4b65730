from typing import NamedTuple

import numpy as np

from ...experiments.quench import QuenchTrial, quench_trial
from ...experiments.sampling import ENSEMBLE_STREAM, SampleRow, output_distribution, sample_probability
from ...schemas.ensemble import EnsembleSpec, QuenchEnsembleSpec
from ..logger import logging
from ..rng import Rng

logger = logging.getLogger(__name__)


class SamplePayload(NamedTuple):
    spec: EnsembleSpec
    outcome: str


# -------- trial tasks --------
def sample_probability_task(payload: SamplePayload, trial: int, rng: Rng) -> SampleRow:
    return sample_probability(payload.spec, payload.outcome, trial, rng)


def quench_task(payload: QuenchEnsembleSpec, trial: int, rng: Rng) -> QuenchTrial:
    return quench_trial(payload, trial, rng)


def distribution_task(payload: EnsembleSpec, trial: int, rng: Rng) -> np.ndarray:
    return output_distribution(payload, rng.substream(ENSEMBLE_STREAM))


# -------- base functions --------
def startup() -> None:
    logger.debug("Worker started")


def shutdown() -> None:
    logger.debug("Worker end")
