"""
1D parallel local random circuits.

Each layer flips a fair coin for its offset: even layers pair ``(0,1), (2,3), ...``, odd layers
pair ``(1,2), (3,4), ...``. Every pair then receives an independent two-qubit unitary, either
Haar on U(4) or a uniform element of a lifted gate set.
"""

import math

import numpy as np

from ..core.config import settings
from ..core.exceptions import InputError
from ..core.rng import Rng
from ..numerics.random_matrix import haar_via_qr
from ..schemas.ensemble import BrickworkEnsembleSpec
from ..simulator.statevector import Circuit, Operation
from .gate_sets import get_gate_set, lifted_gate_set


def layer_pairs(n: int, offset: int) -> list[tuple[int, int]]:
    """Disjoint nearest-neighbour pairs starting at ``offset`` (0 or 1)."""
    return [(q, q + 1) for q in range(offset, n - 1, 2)]


def sample_brickwork_circuit(spec: BrickworkEnsembleSpec, rng: Rng) -> Circuit:
    """Draw one brickwork circuit.

    Raises
    ------
    InputError
        For an odd qubit count with the Haar source.
    """
    n = spec.qubits
    if spec.source == "haar" and n % 2:
        raise InputError(f"Haar-local brickwork needs an even qubit count, got {n}")

    offsets = rng.integers(0, 2, size=spec.depth)
    ops: list[Operation] = []
    if spec.source == "haar":
        gates_needed = sum(len(layer_pairs(n, int(o))) for o in offsets)
        draws = haar_via_qr(4, rng, gates_needed) if gates_needed else np.empty((0, 4, 4), dtype=np.complex128)
        cursor = 0
        for offset in offsets:
            for pair in layer_pairs(n, int(offset)):
                ops.append(Operation(draws[cursor], pair, "haar4"))
                cursor += 1
    else:
        names, matrices = lifted_gate_set(get_gate_set(spec.source))
        for offset in offsets:
            pairs = layer_pairs(n, int(offset))
            choices = rng.integers(0, len(matrices), size=len(pairs))
            for pair, choice in zip(pairs, choices):
                ops.append(Operation(matrices[int(choice)], pair, names[int(choice)]))
    return Circuit(n, tuple(ops))


def design_depth(n: int, epsilon: float, c: float | None = None) -> int:
    """ceil(c * n * ln(1/epsilon)); ``c`` defaults to ``settings.DESIGN_DEPTH_CONSTANT``."""
    c = settings.DESIGN_DEPTH_CONSTANT if c is None else c
    if c <= 0:
        raise InputError(f"Calibration constant must be positive, got {c}")
    if not 0 < epsilon < 1:
        raise InputError(f"epsilon must lie in (0, 1), got {epsilon}")
    # guard against ln(1/e) landing a few ulps above 1
    return max(0, math.ceil(c * n * math.log(1.0 / epsilon) - 1e-9))
