"""Discrete diagonal-unitary circuits: controlled phases on pairs, phase gates on sites."""

from itertools import combinations

from ..core.rng import Rng
from ..schemas.ensemble import DiagonalEnsembleSpec
from ..simulator.gates import controlled_phase, phase
from ..simulator.statevector import Circuit, Operation, State, apply_circuit, hadamard_all, plus_state


def structure_pairs(n: int, structure: str) -> list[tuple[int, int]]:
    if structure == "chain":
        return [(q, q + 1) for q in range(n - 1)]
    return list(combinations(range(n), 2))


def sample_diagonal_circuit(spec: DiagonalEnsembleSpec, rng: Rng) -> Circuit:
    """Controlled-phase on every structure pair, then a phase gate on every site.

    Each angle is drawn uniformly and independently from its phase set.
    """
    pairs = structure_pairs(spec.qubits, spec.structure)
    pair_choice = rng.integers(0, len(spec.pair_phases), size=len(pairs))
    single_choice = rng.integers(0, len(spec.single_phases), size=spec.qubits)

    ops: list[Operation] = []
    for pair, k in zip(pairs, pair_choice):
        phi = spec.pair_phases[int(k)]
        ops.append(Operation(controlled_phase(phi), pair, f"cphase({phi:.4f})"))
    for q, k in enumerate(single_choice):
        phi = spec.single_phases[int(k)]
        ops.append(Operation(phase(phi), (q,), f"phase({phi:.4f})"))
    return Circuit(spec.qubits, tuple(ops))


def diagonal_output_state(c: Circuit) -> State:
    """``H^n C |+>^n``: the circuit on its intended input, read out in the X basis."""
    return hadamard_all(apply_circuit(plus_state(c.n), c, validate=False))
