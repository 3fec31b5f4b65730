"""
One run of the quench architecture: random product input, CZ evolution on the interaction
edges, X-basis readout, and the split of outcomes into the readout column ``x_R`` and the
rest ``x_L``.
"""

from collections.abc import Iterator
from dataclasses import dataclass
from functools import reduce
from itertools import product

import numpy as np

from ..core.config import settings
from ..core.exceptions import InputError, ResourceLimitError, ZeroMarginalError
from ..core.logger import logging
from ..core.rng import Rng
from ..schemas.ensemble import QuenchEnsembleSpec
from ..schemas.quench import LatticeExport, SiteRead
from ..simulator.gates import CZ
from ..simulator.statevector import State, apply_gate, full_distribution, hadamard_all
from .lattice import (
    InteractionSublattice,
    LatticeSpec,
    Role,
    SiteRoles,
    assign_roles,
    build_interaction_sublattice,
    build_lattice,
    left_sites,
    readout_sites,
)

logger = logging.getLogger(__name__)

ZERO_MARGINAL_TOLERANCE = 1e-14


@dataclass(frozen=True)
class BetaSample:
    """Input parameters: one bit per pink site, one k in {0..3} per yellow site (qubit order)."""

    pink_bits: tuple[int, ...]
    yellow_k: tuple[int, ...]


@dataclass(frozen=True)
class QuenchInstance:
    lattice: LatticeSpec
    roles: SiteRoles
    sublattice: InteractionSublattice
    beta: BetaSample

    def __post_init__(self) -> None:
        if self.roles.lattice != self.lattice or self.sublattice.lattice != self.lattice:
            raise InputError("Roles and interaction edges were built for a different lattice")
        if len(self.beta.pink_bits) != len(self.roles.pink) or len(self.beta.yellow_k) != len(self.roles.yellow):
            raise InputError("Input parameters do not match the number of pink and yellow sites")
        if any(b not in (0, 1) for b in self.beta.pink_bits) or any(not 0 <= k < 4 for k in self.beta.yellow_k):
            raise InputError("Pink bits must be 0/1 and yellow indices must lie in {0, 1, 2, 3}")


@dataclass(frozen=True)
class OutcomeSplit:
    x_R: str
    x_L: str


# -------------- input family --------------
def sample_beta(roles: SiteRoles, rng: Rng) -> BetaSample:
    pink = rng.integers(0, 2, size=len(roles.pink))
    yellow = rng.integers(0, 4, size=len(roles.yellow))
    return BetaSample(tuple(int(b) for b in pink), tuple(int(k) for k in yellow))


def family_size(roles: SiteRoles) -> int:
    """|S_ac| = 2^#pink * 4^#yellow."""
    return 2 ** len(roles.pink) * 4 ** len(roles.yellow)


def enumerate_betas(roles: SiteRoles) -> Iterator[BetaSample]:
    """Every beta of the family, pink bits varying slowest."""
    for pink in product((0, 1), repeat=len(roles.pink)):
        for yellow in product(range(4), repeat=len(roles.yellow)):
            yield BetaSample(pink, yellow)


def build_architecture(spec: QuenchEnsembleSpec) -> tuple[LatticeSpec, SiteRoles, InteractionSublattice]:
    lattice = build_lattice(spec.m, spec.column_base, spec.coloring_parity, spec.readout)
    roles = assign_roles(lattice)
    return lattice, roles, build_interaction_sublattice(lattice, roles)


def sample_instance(spec: QuenchEnsembleSpec, rng: Rng) -> QuenchInstance:
    lattice, roles, sublattice = build_architecture(spec)
    return QuenchInstance(lattice, roles, sublattice, sample_beta(roles, rng))


# -------------- dynamics --------------
def _site_vector(role: Role, value: int) -> np.ndarray:
    if role == Role.PINK:
        return np.array([1.0, 0.0] if value == 0 else [0.0, 1.0], dtype=np.complex128)
    if role == Role.BLUE:
        return np.array([1.0, 1.0], dtype=np.complex128) / np.sqrt(2)
    return np.array([1.0, np.exp(1j * value * np.pi / 4)], dtype=np.complex128) / np.sqrt(2)


def prepare_input_state(instance: QuenchInstance) -> State:
    """Product state: pink -> |b>, blue -> |+>, yellow -> (|0> + e^{i k pi/4}|1>)/sqrt(2)."""
    n = instance.lattice.n
    if n > settings.MAX_QUBITS:
        raise ResourceLimitError(f"{n} qubits exceeds the dense limit of {settings.MAX_QUBITS}")
    values = dict(zip(instance.roles.pink, instance.beta.pink_bits))
    values.update(zip(instance.roles.yellow, instance.beta.yellow_k))
    factors = [_site_vector(role, values.get(q, 0)) for q, role in enumerate(instance.roles.roles)]
    return State(n, reduce(np.kron, factors))


def evolve(instance: QuenchInstance, state: State) -> State:
    """CZ on every interaction edge."""
    if state.n != instance.lattice.n:
        raise InputError(f"State of {state.n} qubits does not fit a lattice of {instance.lattice.n} sites")
    for edge in instance.sublattice.edges:
        state = apply_gate(state, CZ, edge, validate=False)
    return state


def _check_exact(instance: QuenchInstance) -> None:
    if instance.lattice.m > settings.MAX_EXACT_M:
        raise ResourceLimitError(
            f"Exact distributions are limited to m <= {settings.MAX_EXACT_M}, got m={instance.lattice.m}"
        )


def q_ac_distribution(instance: QuenchInstance) -> np.ndarray:
    """q(x | beta) over all 2^n outcomes (big-endian qubit order)."""
    _check_exact(instance)
    state = hadamard_all(evolve(instance, prepare_input_state(instance)))
    return full_distribution(state)


# -------------- outcome split --------------
def split_outcome(lattice: LatticeSpec, x: str) -> OutcomeSplit:
    if len(x) != lattice.n or any(c not in "01" for c in x):
        raise InputError(f"Expected a bitstring of length {lattice.n}, got '{x}'")
    return OutcomeSplit(
        x_R="".join(x[q] for q in readout_sites(lattice)),
        x_L="".join(x[q] for q in left_sites(lattice)),
    )


def recombine(lattice: LatticeSpec, split: OutcomeSplit) -> str:
    right, left = readout_sites(lattice), left_sites(lattice)
    if len(split.x_R) != len(right) or len(split.x_L) != len(left):
        raise InputError(f"Split sizes ({len(split.x_L)}, {len(split.x_R)}) do not fit m={lattice.m}")
    bits = [""] * lattice.n
    for q, b in zip(right, split.x_R):
        bits[q] = b
    for q, b in zip(left, split.x_L):
        bits[q] = b
    return "".join(bits)


def joint_table(instance: QuenchInstance, distribution: np.ndarray | None = None) -> np.ndarray:
    """q(x_L, x_R | beta) as a (2^(n-m), 2^m) array, rows in x_L order."""
    lattice = instance.lattice
    p = q_ac_distribution(instance) if distribution is None else distribution
    order = left_sites(lattice) + readout_sites(lattice)
    table = np.transpose(p.reshape((2,) * lattice.n), order)
    return table.reshape(2 ** (lattice.n - lattice.m), 2**lattice.m)


def marginal_xL(instance: QuenchInstance, distribution: np.ndarray | None = None) -> np.ndarray:
    return joint_table(instance, distribution).sum(axis=1)


def conditional_table(instance: QuenchInstance, distribution: np.ndarray | None = None) -> np.ndarray:
    """q(x_R | x_L, beta) for every x_L; each row sums to one.

    Raises
    ------
    ZeroMarginalError
        If some x_L has vanishing marginal probability.
    """
    table = joint_table(instance, distribution)
    marginal = table.sum(axis=1)
    if np.any(marginal <= ZERO_MARGINAL_TOLERANCE):
        worst = int(np.argmin(marginal))
        logger.error(f"x_L row {worst} has marginal {marginal[worst]:.3e} (m={instance.lattice.m})")
        raise ZeroMarginalError(f"Zero x_L marginal at row {worst} for m={instance.lattice.m}")
    return table / marginal[:, None]


def conditional_xR(instance: QuenchInstance, x_L: str, distribution: np.ndarray | None = None) -> np.ndarray:
    lattice = instance.lattice
    if len(x_L) != lattice.n - lattice.m or any(c not in "01" for c in x_L):
        raise InputError(f"Expected an x_L bitstring of length {lattice.n - lattice.m}, got '{x_L}'")
    table = joint_table(instance, distribution)
    row = table[int(x_L, 2)]
    total = row.sum()
    if total <= ZERO_MARGINAL_TOLERANCE:
        raise ZeroMarginalError(f"Zero marginal for x_L={x_L}")
    return row / total


def export_lattice(lattice: LatticeSpec, roles: SiteRoles, sublattice: InteractionSublattice) -> LatticeExport:
    return LatticeExport(
        m=lattice.m,
        rows=lattice.rows,
        cols=lattice.cols,
        n=lattice.n,
        column_base=lattice.column_base,
        coloring_parity=lattice.coloring_parity,
        readout=lattice.readout,
        readout_sites=readout_sites(lattice),
        sites=[
            SiteRead(row=i, col=j, qubit=lattice.qubit(i, j), role=roles[(i, j)].value) for i, j in lattice.sites()
        ],
        edges=[(u, v) for u, v in sublattice.edges],
        degree=list(sublattice.degree),
        family_size=family_size(roles),
    )
