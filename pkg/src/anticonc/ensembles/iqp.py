"""
Dense IQP circuits over angles k * pi/8.

A circuit is ``V = prod_i exp(i a_i X_i) prod_{i<j} exp(i a_ij X_i X_j)`` with ``a = k * pi/8``,
``k`` in Z_8. All gates are diagonal in the X basis, so ``V = H^n D H^n`` with

    D(b) = exp(i sum_i a_i s_i + i sum_{i<j} a_ij s_i s_j),    s = 1 - 2b.

Pairs are ordered as :func:`itertools.combinations` over ``range(m)``. The circuits form a
commutative group under multiplication; composition adds indices modulo 8.
"""

from dataclasses import dataclass
from functools import reduce
from itertools import combinations

import numpy as np

from ..core.exceptions import InputError
from ..core.rng import Rng
from ..simulator.gates import X
from ..simulator.statevector import Circuit, Operation, State, hadamard_all, output_probability, plus_state

ANGLE_UNIT = np.pi / 8
ORDER = 8


@dataclass(frozen=True)
class IqpCircuit:
    m: int
    single_angles: tuple[int, ...]
    pair_angles: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise InputError(f"IQP circuits need at least one qubit, got {self.m}")
        single = tuple(int(k) for k in self.single_angles)
        pair = tuple(int(k) for k in self.pair_angles)
        if len(single) != self.m or len(pair) != self.m * (self.m - 1) // 2:
            raise InputError(
                f"m={self.m} needs {self.m} single and {self.m * (self.m - 1) // 2} pair angles, "
                f"got {len(single)} and {len(pair)}"
            )
        if any(k < 0 or k >= ORDER for k in single + pair):
            raise InputError("Angle indices must lie in {0, ..., 7}")
        object.__setattr__(self, "single_angles", single)
        object.__setattr__(self, "pair_angles", pair)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return list(combinations(range(self.m), 2))

    @property
    def parameter_count(self) -> int:
        return len(self.single_angles) + len(self.pair_angles)


def sample_dense_iqp(m: int, rng: Rng) -> IqpCircuit:
    if m < 1:
        raise InputError(f"IQP circuits need at least one qubit, got {m}")
    indices = rng.integers(0, ORDER, size=m + m * (m - 1) // 2)
    return IqpCircuit(m, tuple(indices[:m]), tuple(indices[m:]))


def iqp_identity(m: int) -> IqpCircuit:
    return IqpCircuit(m, (0,) * m, (0,) * (m * (m - 1) // 2))


def iqp_inverse(c: IqpCircuit) -> IqpCircuit:
    return IqpCircuit(
        c.m,
        tuple((-k) % ORDER for k in c.single_angles),
        tuple((-k) % ORDER for k in c.pair_angles),
    )


def compose_iqp(a: IqpCircuit, b: IqpCircuit) -> IqpCircuit:
    if a.m != b.m:
        raise InputError(f"Cannot compose IQP circuits on {a.m} and {b.m} qubits")
    return IqpCircuit(
        a.m,
        tuple((x + y) % ORDER for x, y in zip(a.single_angles, b.single_angles)),
        tuple((x + y) % ORDER for x, y in zip(a.pair_angles, b.pair_angles)),
    )


# -------------- evaluation --------------
def x_basis_phases(c: IqpCircuit) -> np.ndarray:
    """Diagonal ``D`` of ``V`` in the Hadamard-rotated basis, length 2^m, big-endian."""
    bits = (np.arange(2**c.m)[:, None] >> np.arange(c.m - 1, -1, -1)) & 1
    s = 1 - 2 * bits
    exponent = s @ (np.asarray(c.single_angles, dtype=float) * ANGLE_UNIT)
    for (i, j), k in zip(c.pairs, c.pair_angles):
        if k:
            exponent = exponent + k * ANGLE_UNIT * s[:, i] * s[:, j]
    return np.exp(1j * exponent)


def iqp_unitary_apply(c: IqpCircuit, state: State) -> State:
    """``H^m D H^m |psi>``."""
    if state.n != c.m:
        raise InputError(f"IQP circuit on {c.m} qubits cannot act on a {state.n}-qubit state")
    rotated = hadamard_all(state)
    return hadamard_all(State(c.m, rotated.amplitudes * x_basis_phases(c)))


def iqp_output_state(c: IqpCircuit) -> State:
    """``V|0>``, using ``H^m |0> = |+>``."""
    plus = plus_state(c.m)
    return hadamard_all(State(c.m, plus.amplitudes * x_basis_phases(c)))


def iqp_output_probability(c: IqpCircuit, x: str) -> float:
    """|<x|V|0>|^2."""
    return output_probability(iqp_output_state(c), x)


def iqp_unitary_matrix(c: IqpCircuit) -> np.ndarray:
    """Dense 2^m x 2^m unitary; a reference oracle for small m."""
    h = reduce(np.kron, [np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)] * c.m)
    return h @ np.diag(x_basis_phases(c)) @ h


def iqp_gate_circuit(c: IqpCircuit, reverse: bool = False) -> Circuit:
    """The same unitary as an explicit list of exp(i a X) and exp(i a XX) gates."""
    xx = np.kron(X, X)
    ops: list[Operation] = []
    for q, k in enumerate(c.single_angles):
        a = k * ANGLE_UNIT
        ops.append(Operation(np.cos(a) * np.eye(2) + 1j * np.sin(a) * X, (q,), f"rx{k}"))
    for (i, j), k in zip(c.pairs, c.pair_angles):
        a = k * ANGLE_UNIT
        ops.append(Operation(np.cos(a) * np.eye(4) + 1j * np.sin(a) * xx, (i, j), f"rxx{k}"))
    if reverse:
        ops.reverse()
    return Circuit(c.m, tuple(ops))
