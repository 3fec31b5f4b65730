import numpy as np
import pytest

from src.anticonc.core.exceptions import InputError
from src.anticonc.core.rng import Rng
from src.anticonc.experiments.sampling import output_distribution, resolve_outcome, sample_probability
from src.anticonc.schemas.ensemble import (
    BrickworkEnsembleSpec,
    DiagonalEnsembleSpec,
    HaarEnsembleSpec,
    IqpEnsembleSpec,
    QuenchEnsembleSpec,
)

SPECS = [
    HaarEnsembleSpec(qubits=3),
    BrickworkEnsembleSpec(qubits=3, depth=4),
    BrickworkEnsembleSpec(qubits=4, depth=2, source="bis"),
    IqpEnsembleSpec(qubits=3),
    DiagonalEnsembleSpec(qubits=3),
    DiagonalEnsembleSpec(qubits=3, structure="chain"),
    QuenchEnsembleSpec(m=1),
]


class TestResolveOutcome:
    """Outcome selection per trial."""

    def test_zero(self, rng):
        assert resolve_outcome("zero", 3, rng) == "000"

    def test_fixed_bitstring(self, rng):
        assert resolve_outcome("101", 3, rng) == "101"

    def test_random_is_seeded(self):
        assert resolve_outcome("random", 6, Rng(1)) == resolve_outcome("random", 6, Rng(1))

    def test_wrong_length(self, rng):
        with pytest.raises(InputError):
            resolve_outcome("10", 3, rng)


class TestOutputDistribution:
    """Full output distributions of one ensemble member."""

    @pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.ensemble)
    def test_is_normalized(self, spec, rng):
        dist = output_distribution(spec, rng)
        assert dist.shape == (2**spec.n,)
        assert np.all(dist >= -1e-15)
        assert dist.sum() == pytest.approx(1.0, abs=1e-10)

    def test_depth_zero_brickwork_is_deterministic(self, rng):
        dist = output_distribution(BrickworkEnsembleSpec(qubits=3, depth=0), rng)
        assert dist[0] == pytest.approx(1.0)


class TestSampleProbability:
    """One row per trial."""

    def test_row_fields(self):
        spec = BrickworkEnsembleSpec(qubits=3, depth=4)
        row = sample_probability(spec, "zero", 5, Rng(2))
        assert (row.trial, row.ensemble, row.n, row.depth, row.x) == (5, "brickwork", 3, 4, "000")
        assert 0.0 <= row.p <= 1.0

    def test_depth_only_for_brickwork(self):
        assert sample_probability(HaarEnsembleSpec(qubits=2), "zero", 0, Rng(2)).depth is None

    def test_reproducible(self):
        spec = IqpEnsembleSpec(qubits=3)
        assert sample_probability(spec, "random", 0, Rng(8)) == sample_probability(spec, "random", 0, Rng(8))

    def test_probability_matches_distribution(self):
        spec = DiagonalEnsembleSpec(qubits=3)
        row = sample_probability(spec, "random", 0, Rng(4))
        dist = output_distribution(spec, Rng(4).substream(0))
        assert row.p == pytest.approx(dist[int(row.x, 2)])
