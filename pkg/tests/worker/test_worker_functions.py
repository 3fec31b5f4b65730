"""Test cases for the trial tasks and the process pool."""

import numpy as np
import pytest

from src.anticonc.core.exceptions import InputError
from src.anticonc.core.rng import Rng
from src.anticonc.core.worker.functions import (
    SamplePayload,
    distribution_task,
    quench_task,
    sample_probability_task,
)
from src.anticonc.core.worker.pool import chunk_bounds, run_trials
from src.anticonc.experiments.sampling import output_distribution
from src.anticonc.schemas.ensemble import HaarEnsembleSpec, QuenchEnsembleSpec


class TestChunkBounds:
    """Contiguous chunks covering every trial."""

    def test_exact_split(self):
        assert chunk_bounds(6, 3) == [(0, 3), (3, 6)]

    def test_ragged_tail(self):
        assert chunk_bounds(7, 3) == [(0, 3), (3, 6), (6, 7)]

    def test_no_trials(self):
        assert chunk_bounds(0, 5) == []


class TestTasks:
    """Tasks delegate to the experiment functions with the given stream."""

    def test_sample_probability_task(self):
        row = sample_probability_task(SamplePayload(HaarEnsembleSpec(qubits=2), "zero"), 3, Rng(1))
        assert row.trial == 3
        assert row.x == "00"
        assert 0.0 <= row.p <= 1.0

    def test_distribution_task_uses_ensemble_stream(self):
        spec = HaarEnsembleSpec(qubits=2)
        expected = output_distribution(spec, Rng(9).substream(0))
        np.testing.assert_allclose(distribution_task(spec, 0, Rng(9)), expected)

    def test_quench_task(self):
        trial = quench_task(QuenchEnsembleSpec(m=1), 0, Rng(4))
        assert len(trial.x_R) == 1
        assert trial.max_marginal_deviation < 1e-9


class TestRunTrials:
    """Results are in trial order and independent of the worker count."""

    def test_sequential_order(self):
        payload = SamplePayload(HaarEnsembleSpec(qubits=2), "random")
        rows = run_trials(sample_probability_task, payload, 10, seed=5, threads=1, chunk_size=3)
        assert [r.trial for r in rows] == list(range(10))

    def test_independent_of_threads_and_chunks(self):
        payload = SamplePayload(HaarEnsembleSpec(qubits=3), "random")
        single = run_trials(sample_probability_task, payload, 12, seed=5, threads=1, chunk_size=12)
        pooled = run_trials(sample_probability_task, payload, 12, seed=5, threads=2, chunk_size=4)
        assert single == pooled

    def test_matches_direct_substreams(self):
        payload = SamplePayload(HaarEnsembleSpec(qubits=2), "zero")
        rows = run_trials(sample_probability_task, payload, 4, seed=11, threads=1)
        direct = [sample_probability_task(payload, t, Rng(11).substream(t)) for t in range(4)]
        assert rows == direct

    def test_unregistered_function(self):
        with pytest.raises(InputError):
            run_trials(lambda payload, t, rng: t, None, 3, seed=0)

    def test_negative_trials(self):
        with pytest.raises(InputError):
            run_trials(sample_probability_task, None, -1, seed=0)
