"""
Dense statevector simulation.

Qubit 0 is the most significant bit of the amplitude index (big-endian), so the bitstring
``"010"`` addresses index 2. Amplitudes are viewed as an ``(2,) * n`` tensor whose axis ``q``
is qubit ``q``; a k-qubit gate is a contraction over k axes, O(2^n) per gate.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from ..core.config import settings
from ..core.exceptions import InputError, ResourceLimitError
from ..core.rng import Rng
from .gates import H, as_gate_matrix, ensure_unitary, is_diagonal


@dataclass
class State:
    """Normalized amplitude vector over ``n`` qubits."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InputError(f"Qubit count must be at least 1, got {self.n}")
        if self.n > settings.MAX_QUBITS:
            raise ResourceLimitError(f"{self.n} qubits exceeds the dense limit of {settings.MAX_QUBITS}")
        self.amplitudes = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        if self.amplitudes.size != 2**self.n:
            raise InputError(f"State of {self.n} qubits needs {2**self.n} amplitudes, got {self.amplitudes.size}")

    @property
    def dimension(self) -> int:
        return 2**self.n

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape((2,) * self.n)

    def copy(self) -> "State":
        return State(self.n, self.amplitudes.copy())


class Operation(NamedTuple):
    matrix: np.ndarray
    targets: tuple[int, ...]
    name: str = ""


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list on ``n`` qubits; immutable once built."""

    n: int
    ops: tuple[Operation, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        ops = tuple(self.ops)
        for op in ops:
            _check_targets(self.n, op.targets)
            if op.matrix.shape != (2 ** len(op.targets),) * 2:
                raise InputError(f"Gate '{op.name}' of shape {op.matrix.shape} does not fit targets {op.targets}")
        object.__setattr__(self, "ops", ops)

    def __len__(self) -> int:
        return len(self.ops)

    def append(self, matrix: np.ndarray, targets: Sequence[int], name: str = "") -> "Circuit":
        op = Operation(as_gate_matrix(matrix), tuple(int(t) for t in targets), name)
        return Circuit(self.n, self.ops + (op,))

    def validate(self, tol: float | None = None) -> None:
        """Unitarity check gate by gate."""
        for op in self.ops:
            ensure_unitary(op.matrix, tol)


# -------------- helpers --------------
def _check_bitstring(n: int, x: str) -> int:
    if len(x) != n or any(c not in "01" for c in x):
        raise InputError(f"Expected a bitstring of length {n}, got '{x}'")
    return int(x, 2)


def _check_targets(n: int, targets: Sequence[int]) -> tuple[int, ...]:
    targets = tuple(int(t) for t in targets)
    if not targets or len(targets) > 2:
        raise InputError(f"Gates act on one or two qubits, got targets {targets}")
    if len(set(targets)) != len(targets):
        raise InputError(f"Two-qubit targets must be distinct, got {targets}")
    if any(t < 0 or t >= n for t in targets):
        raise InputError(f"Targets {targets} out of range for {n} qubits")
    return targets


def bitstring(index: int, n: int) -> str:
    return format(index, f"0{n}b")


# -------------- states --------------
def init_basis_state(n: int, x: str) -> State:
    """Computational basis state |x>."""
    if n < 1:
        raise InputError(f"Qubit count must be at least 1, got {n}")
    index = _check_bitstring(n, x)
    amplitudes = np.zeros(2**n, dtype=np.complex128)
    amplitudes[index] = 1.0
    return State(n, amplitudes)


def zero_state(n: int) -> State:
    return init_basis_state(n, "0" * n)


def plus_state(n: int) -> State:
    return State(n, np.full(2**n, 2.0 ** (-n / 2), dtype=np.complex128))


# -------------- gate application --------------
def apply_gate(state: State, g: np.ndarray, targets: Sequence[int], validate: bool | None = None) -> State:
    """Apply a one- or two-qubit gate; identity on every other qubit.

    Parameters
    ----------
    state : State
        Input state, left untouched.
    g : np.ndarray
        2x2 or 4x4 unitary. For two targets ``(a, b)`` the matrix index is ``2*bit_a + bit_b``.
    targets : Sequence[int]
        Qubit indices.
    validate : bool | None
        Unitarity check; defaults to ``settings.VALIDATE_GATES``.

    Returns
    -------
    State
        The transformed state.
    """
    targets = _check_targets(state.n, targets)
    g = as_gate_matrix(g)
    k = len(targets)
    if g.shape[0] != 2**k:
        raise InputError(f"A {g.shape[0]}x{g.shape[0]} gate cannot act on {k} qubit(s)")
    if settings.VALIDATE_GATES if validate is None else validate:
        ensure_unitary(g)

    psi = state.tensor()
    if is_diagonal(g):
        # elementwise path for phase-type gates
        diag = np.diag(g).reshape((2,) * k)
        order = np.argsort(targets)
        shape = [1] * state.n
        for t in targets:
            shape[t] = 2
        out = psi * diag.transpose(order).reshape(shape)
    else:
        gt = g.reshape((2,) * (2 * k))
        out = np.tensordot(gt, psi, axes=(list(range(k, 2 * k)), list(targets)))
        out = np.moveaxis(out, list(range(k)), list(targets))
    return State(state.n, np.ascontiguousarray(out).reshape(-1))


def apply_circuit(state: State, c: Circuit, validate: bool | None = None) -> State:
    if c.n != state.n:
        raise InputError(f"Circuit on {c.n} qubits cannot act on a {state.n}-qubit state")
    for op in c.ops:
        state = apply_gate(state, op.matrix, op.targets, validate=validate)
    return state


def hadamard_all(state: State) -> State:
    """H on every qubit (X-basis readout)."""
    psi = state.tensor()
    for q in range(state.n):
        psi = np.moveaxis(np.tensordot(H, psi, axes=([1], [q])), 0, q)
    return State(state.n, np.ascontiguousarray(psi).reshape(-1))


# -------------- readout --------------
def output_probability(state: State, x: str) -> float:
    """|<x|psi>|^2."""
    index = _check_bitstring(state.n, x)
    amplitude = state.amplitudes[index]
    return float(amplitude.real**2 + amplitude.imag**2)


def full_distribution(state: State) -> np.ndarray:
    probabilities = state.amplitudes.real**2 + state.amplitudes.imag**2
    return probabilities


def marginal_probabilities(state: State, qubits: Sequence[int]) -> np.ndarray:
    """Distribution of the listed qubits (in the listed order), others summed out."""
    qubits = [int(q) for q in qubits]
    if len(set(qubits)) != len(qubits) or any(q < 0 or q >= state.n for q in qubits):
        raise InputError(f"Invalid qubit selection {qubits} for {state.n} qubits")
    probabilities = full_distribution(state).reshape((2,) * state.n)
    others = tuple(q for q in range(state.n) if q not in qubits)
    reduced = probabilities.sum(axis=others) if others else probabilities
    kept = sorted(qubits)
    return np.transpose(reduced, [kept.index(q) for q in qubits]).reshape(-1)


def sample_outcomes(state: State, shots: int, rng: Rng) -> list[str]:
    """Draw ``shots`` bitstrings with probability |amplitude|^2."""
    probabilities = full_distribution(state)
    total = float(probabilities.sum())
    if abs(total - 1) > settings.NORM_TOLERANCE:
        raise InputError(f"Cannot sample from an unnormalized state (norm^2 = {total:.12g})")
    probabilities = probabilities / total
    indices = rng.generator.choice(probabilities.size, size=shots, p=probabilities)
    return [bitstring(int(i), state.n) for i in indices]


def sample_outcome(state: State, rng: Rng) -> str:
    return sample_outcomes(state, 1, rng)[0]
