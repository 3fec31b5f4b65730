"""
One Monte Carlo trial per ensemble: draw a circuit (or unitary, or quench input), then read
the probability of the configured outcome.

Trial ``t`` uses ``Rng(seed).substream(t)``; inside a trial, substream 0 draws the ensemble
member and substream 1 draws a random outcome, so both are fixed by ``(seed, t)`` alone.
"""

from dataclasses import asdict, dataclass

import numpy as np

from ..core.exceptions import InputError
from ..core.rng import Rng
from ..ensembles.brickwork import sample_brickwork_circuit
from ..ensembles.diagonal import diagonal_output_state, sample_diagonal_circuit
from ..ensembles.iqp import iqp_output_state, sample_dense_iqp
from ..numerics.random_matrix import haar_state
from ..quench.architecture import q_ac_distribution, sample_instance
from ..schemas.ensemble import (
    BrickworkEnsembleSpec,
    DiagonalEnsembleSpec,
    EnsembleSpec,
    HaarEnsembleSpec,
    IqpEnsembleSpec,
    QuenchEnsembleSpec,
)
from ..simulator.statevector import apply_circuit, bitstring, full_distribution, zero_state

ENSEMBLE_STREAM = 0
OUTCOME_STREAM = 1


@dataclass(frozen=True)
class SampleRow:
    trial: int
    ensemble: str
    n: int
    depth: int | None
    x: str
    p: float

    def as_dict(self) -> dict:
        return asdict(self)


def resolve_outcome(outcome: str, n: int, rng: Rng) -> str:
    if outcome == "zero":
        return "0" * n
    if outcome == "random":
        return bitstring(int(rng.integers(0, 2**n)), n)
    if len(outcome) != n or set(outcome) - {"0", "1"}:
        raise InputError(f"Outcome '{outcome}' is not a bitstring of length {n}")
    return outcome


def output_distribution(spec: EnsembleSpec, rng: Rng) -> np.ndarray:
    """Full output distribution of one ensemble member."""
    match spec:
        case HaarEnsembleSpec():
            psi = haar_state(2**spec.qubits, rng)
            return psi.real**2 + psi.imag**2
        case BrickworkEnsembleSpec():
            circuit = sample_brickwork_circuit(spec, rng)
            return full_distribution(apply_circuit(zero_state(spec.qubits), circuit))
        case IqpEnsembleSpec():
            return full_distribution(iqp_output_state(sample_dense_iqp(spec.qubits, rng)))
        case DiagonalEnsembleSpec():
            return full_distribution(diagonal_output_state(sample_diagonal_circuit(spec, rng)))
        case QuenchEnsembleSpec():
            return q_ac_distribution(sample_instance(spec, rng))
    raise InputError(f"Unsupported ensemble spec {type(spec).__name__}")


def sample_probability(spec: EnsembleSpec, outcome: str, trial: int, rng: Rng) -> SampleRow:
    """Probability of the configured outcome for the ``trial``-th ensemble member."""
    distribution = output_distribution(spec, rng.substream(ENSEMBLE_STREAM))
    x = resolve_outcome(outcome, spec.n, rng.substream(OUTCOME_STREAM))
    depth = spec.depth if isinstance(spec, BrickworkEnsembleSpec) else None
    return SampleRow(trial, spec.ensemble, spec.n, depth, x, float(distribution[int(x, 2)]))
