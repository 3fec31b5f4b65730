"""
Diagonal evolution operators in the computational basis.

Bit ``b`` of qubit ``q`` maps to the Z eigenvalue ``z = 1 - 2b``. The quench Hamiltonian is

    H_ac = sum_{(u,v) in E_I} (pi/4) z_u z_v - sum_v (pi/4) deg_I(v) z_v

and ``exp(-i H_ac)`` equals the product of CZ over ``E_I`` times ``exp(i pi |E_I| / 4)``.
"""

from collections.abc import Iterable

import numpy as np

from ..core.config import settings
from ..core.exceptions import ResourceLimitError
from .lattice import InteractionSublattice, LatticeSpec, SiteRoles, build_interaction_sublattice


def _check_size(n: int) -> None:
    if n > settings.MAX_QUBITS:
        raise ResourceLimitError(f"A dense phase vector on {n} qubits exceeds the limit of {settings.MAX_QUBITS}")


def _bits(n: int, q: int, index: np.ndarray) -> np.ndarray:
    return (index >> (n - 1 - q)) & 1


def cz_phase_vector(n: int, edges: Iterable[tuple[int, int]]) -> np.ndarray:
    """±1 diagonal of the product of CZ gates over ``edges``."""
    _check_size(n)
    index = np.arange(2**n, dtype=np.int64)
    parity = np.zeros(2**n, dtype=np.int8)
    for u, v in edges:
        parity ^= (_bits(n, u, index) & _bits(n, v, index)).astype(np.int8)
    return (1 - 2 * parity).astype(np.complex128)


def hamiltonian_unitary(
    lattice: LatticeSpec,
    roles: SiteRoles,
    sublattice: InteractionSublattice | None = None,
) -> np.ndarray:
    """Per-basis-state phases of ``exp(-i H_ac)``, length 2^n."""
    n = lattice.n
    _check_size(n)
    sublattice = sublattice or build_interaction_sublattice(lattice, roles)
    index = np.arange(2**n, dtype=np.int64)

    z = {q: (1 - 2 * _bits(n, q, index)).astype(np.int8) for q in range(n)}
    energy = np.zeros(2**n, dtype=float)
    for u, v in sublattice.edges:
        energy += (np.pi / 4) * z[u] * z[v]
    for v, deg in enumerate(sublattice.degree):
        if deg:
            energy -= (np.pi / 4) * deg * z[v]
    return np.exp(-1j * energy)
