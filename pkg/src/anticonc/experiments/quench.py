from dataclasses import dataclass
from itertools import product

import numpy as np

from ..core.config import settings
from ..core.logger import logging
from ..core.rng import Rng
from ..ensembles.iqp import ORDER, IqpCircuit, iqp_output_state
from ..quench.architecture import (
    QuenchInstance,
    build_architecture,
    conditional_table,
    enumerate_betas,
    marginal_xL,
    q_ac_distribution,
    sample_instance,
)
from ..quench.hamiltonian import cz_phase_vector, hamiltonian_unitary
from ..schemas.ensemble import QuenchEnsembleSpec
from ..schemas.report import Report, Verdict
from ..simulator.gates import equal_up_to_global_phase
from ..simulator.statevector import bitstring

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuenchTrial:
    trial: int
    pink_bits: tuple[int, ...]
    yellow_k: tuple[int, ...]
    max_marginal_deviation: float
    x_L: str
    x_R: str
    q: float
    conditional: tuple[float, ...]


def quench_trial(spec: QuenchEnsembleSpec, trial: int, rng: Rng) -> QuenchTrial:
    """Draw beta, check the x_L marginal, then read q(x_R | x_L, beta) at a uniform (x_L, x_R).

    ``conditional`` holds the whole conditional distribution of the drawn x_L.
    """
    instance = sample_instance(spec, rng.substream(0))
    distribution = q_ac_distribution(instance)
    marginal = marginal_xL(instance, distribution)
    n_left = instance.lattice.n - instance.lattice.m
    deviation = float(np.max(np.abs(marginal - 2.0**-n_left)))

    table = conditional_table(instance, distribution)
    pick = rng.substream(1)
    left = int(pick.integers(0, table.shape[0]))
    right = int(pick.integers(0, table.shape[1]))
    row = table[left]
    return QuenchTrial(
        trial=trial,
        pink_bits=instance.beta.pink_bits,
        yellow_k=instance.beta.yellow_k,
        max_marginal_deviation=deviation,
        x_L=bitstring(left, n_left),
        x_R=bitstring(right, instance.lattice.m),
        q=float(row[right]),
        conditional=tuple(float(v) for v in row),
    )


def hamiltonian_equivalence_report(spec: QuenchEnsembleSpec, tol: float = 1e-9) -> Report:
    """exp(-i H_ac) against the product of CZ over the interaction edges, up to global phase."""
    lattice, roles, sublattice = build_architecture(spec)
    phases = hamiltonian_unitary(lattice, roles, sublattice)
    cz = cz_phase_vector(lattice.n, sublattice.edges)
    equal, deviation = equal_up_to_global_phase(phases, cz, tol)
    return Report(
        statistic="hamiltonian_cz_equivalence",
        estimate=deviation,
        reference=tol,
        verdict=Verdict.PASS if equal else Verdict.FAIL,
        count=2**lattice.n,
        rule="max deviation up to global phase <= tol",
        parameters={"m": spec.m, "edges": len(sublattice.edges)},
    )


def marginal_report(trials: list[QuenchTrial], m: int, tol: float = 1e-9) -> Report:
    worst = max((t.max_marginal_deviation for t in trials), default=0.0)
    return Report(
        statistic="xL_marginal_uniformity",
        estimate=worst,
        reference=tol,
        verdict=Verdict.PASS if worst <= tol else Verdict.FAIL,
        count=len(trials),
        rule="max |q(x_L|beta) - 2^-(n-m)| <= tol",
        parameters={"m": m},
    )


# -------------- exact laws --------------
@dataclass(frozen=True)
class DiscreteLaw:
    """Atoms in increasing order with their probability masses."""

    atoms: np.ndarray
    masses: np.ndarray


def discrete_law(values: np.ndarray, tol: float | None = None) -> DiscreteLaw:
    """Law of the uniformly weighted ``values``; values within ``tol`` of each other form one atom."""
    tol = settings.KS_TIE_TOLERANCE if tol is None else tol
    values = np.sort(np.ravel(values))
    starts = np.concatenate([[True], np.diff(values) > tol])
    counts = np.diff(np.append(np.flatnonzero(starts), values.size))
    return DiscreteLaw(values[starts], counts / values.size)


def quench_conditional_law(spec: QuenchEnsembleSpec) -> DiscreteLaw:
    """Law of q(x_R | x_L, beta) for uniform beta, x_L and x_R, by enumerating the whole family."""
    lattice, roles, sublattice = build_architecture(spec)
    tables = [
        conditional_table(QuenchInstance(lattice, roles, sublattice, beta)).ravel() for beta in enumerate_betas(roles)
    ]
    logger.info(f"Enumerated {len(tables)} betas for m={spec.m}")
    return discrete_law(np.concatenate(tables))


def iqp_probability_law(m: int) -> DiscreteLaw:
    """Law of |<x|V|0>|^2 for uniform dense IQP ``V`` and uniform ``x``, over every circuit."""
    n_pairs = m * (m - 1) // 2
    probabilities = [
        np.abs(iqp_output_state(IqpCircuit(m, single, pair)).amplitudes) ** 2
        for single in product(range(ORDER), repeat=m)
        for pair in product(range(ORDER), repeat=n_pairs)
    ]
    return discrete_law(np.concatenate(probabilities))


def law_distance(a: DiscreteLaw, b: DiscreteLaw, tol: float | None = None) -> float:
    """Largest CDF difference between two discrete laws."""
    tol = settings.KS_TIE_TOLERANCE if tol is None else tol
    grid = discrete_law(np.concatenate([a.atoms, b.atoms]), tol).atoms
    # grid points are the smallest value of each merged atom
    cdf_a = np.append(0.0, np.cumsum(a.masses))[np.searchsorted(a.atoms, grid + tol, side="right")]
    cdf_b = np.append(0.0, np.cumsum(b.masses))[np.searchsorted(b.atoms, grid + tol, side="right")]
    return float(np.max(np.abs(cdf_a - cdf_b)))


def exact_equivalence_report(m: int, tol: float = 1e-9) -> Report:
    """Exact comparison of the pooled quench conditional law with the dense IQP output law."""
    quench = quench_conditional_law(QuenchEnsembleSpec(m=m))
    iqp = iqp_probability_law(m)
    distance = law_distance(quench, iqp)
    return Report(
        statistic="exact_law_distance",
        estimate=distance,
        reference=tol,
        verdict=Verdict.PASS if distance <= tol else Verdict.FAIL,
        count=int(quench.atoms.size + iqp.atoms.size),
        rule="max |F_quench - F_iqp| <= tol",
        parameters={"m": m},
        details={"quench_atoms": int(quench.atoms.size), "iqp_atoms": int(iqp.atoms.size)},
    )
