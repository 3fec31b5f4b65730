from dataclasses import dataclass, field
from itertools import product

import numpy as np

from ..core.exceptions import InputError
from ..simulator.gates import CZ, SQRT_X, SQRT_Y, H, T, dagger, ensure_unitary, equal_up_to_global_phase


@dataclass(frozen=True)
class GateSet:
    """Named one- and two-qubit unitaries sampled uniformly by the gate-set brickwork."""

    name: str
    elements: dict[str, np.ndarray] = field(default_factory=dict)
    closed_under_inverse: bool = False

    def __post_init__(self) -> None:
        if not self.elements:
            raise InputError(f"Gate set '{self.name}' has no elements")
        for label, g in self.elements.items():
            if g.shape not in {(2, 2), (4, 4)}:
                raise InputError(f"Gate '{label}' must be 2x2 or 4x4, got {g.shape}")
            ensure_unitary(g)
        if self.closed_under_inverse and not is_closed_under_inverse(self):
            raise InputError(f"Gate set '{self.name}' is flagged closed under inverse but is not")

    def single_qubit(self) -> dict[str, np.ndarray]:
        return {k: g for k, g in self.elements.items() if g.shape == (2, 2)}

    def two_qubit(self) -> dict[str, np.ndarray]:
        return {k: g for k, g in self.elements.items() if g.shape == (4, 4)}


def gate_set_bis() -> GateSet:
    """The universal set {CZ, H, sqrt(X), sqrt(Y), T}."""
    return GateSet(
        name="bis",
        elements={"CZ": CZ, "H": H, "SQRT_X": SQRT_X, "SQRT_Y": SQRT_Y, "T": T},
        closed_under_inverse=False,
    )


GATE_SETS = {"bis": gate_set_bis}


def get_gate_set(name: str) -> GateSet:
    try:
        return GATE_SETS[name]()
    except KeyError:
        raise InputError(f"Unknown gate set '{name}', expected one of {sorted(GATE_SETS)}") from None


def is_closed_under_inverse(gate_set: GateSet, tol: float = 1e-10) -> bool:
    """Every element's inverse equals some element of the same arity up to global phase."""
    elements = list(gate_set.elements.values())
    for g in elements:
        inverse = dagger(g)
        if not any(h.shape == g.shape and equal_up_to_global_phase(inverse, h, tol)[0] for h in elements):
            return False
    return True


def lifted_gate_set(gate_set: GateSet) -> tuple[list[str], list[np.ndarray]]:
    """Lift a mixed-arity gate set to U(4).

    Single-qubit elements are paired as ``g (x) g'`` over all ordered pairs, two-qubit elements
    are kept as they are. A uniform draw from the returned list is one brickwork gate.
    """
    names: list[str] = []
    matrices: list[np.ndarray] = []
    singles = gate_set.single_qubit()
    for (a, ga), (b, gb) in product(singles.items(), repeat=2):
        names.append(f"{a}*{b}")
        matrices.append(np.kron(ga, gb))
    for label, g in gate_set.two_qubit().items():
        names.append(label)
        matrices.append(g)
    return names, matrices
