import numpy as np
import pytest

from src.anticonc.core.exceptions import ResourceLimitError
from src.anticonc.quench.hamiltonian import cz_phase_vector, hamiltonian_unitary
from src.anticonc.quench.lattice import assign_roles, build_interaction_sublattice, build_lattice
from src.anticonc.simulator.gates import CZ, equal_up_to_global_phase


class TestCzPhaseVector:
    """Diagonal of a product of CZ gates."""

    def test_single_edge_is_cz(self):
        np.testing.assert_array_equal(cz_phase_vector(2, [(0, 1)]), np.diag(CZ))

    def test_repeated_edge_cancels(self):
        np.testing.assert_array_equal(cz_phase_vector(3, [(0, 2), (0, 2)]), np.ones(8))

    def test_size_limit(self, restore_settings):
        restore_settings.MAX_QUBITS = 4
        with pytest.raises(ResourceLimitError):
            cz_phase_vector(5, [])


class TestHamiltonianUnitary:
    """exp(-i H) equals the CZ product up to a global phase."""

    @pytest.mark.parametrize("m", [1, 2])
    @pytest.mark.parametrize("parity", ["default", "flipped"])
    def test_matches_cz_product(self, m, parity):
        lattice = build_lattice(m, coloring_parity=parity)
        roles = assign_roles(lattice)
        sublattice = build_interaction_sublattice(lattice, roles)
        equal, deviation = equal_up_to_global_phase(
            hamiltonian_unitary(lattice, roles, sublattice), cz_phase_vector(lattice.n, sublattice.edges), 1e-9
        )
        assert equal, deviation

    def test_global_phase(self):
        lattice = build_lattice(2)
        roles = assign_roles(lattice)
        sublattice = build_interaction_sublattice(lattice, roles)
        phases = hamiltonian_unitary(lattice, roles)
        ratio = phases / cz_phase_vector(lattice.n, sublattice.edges)
        np.testing.assert_allclose(ratio, np.exp(1j * np.pi * len(sublattice.edges) / 4), atol=1e-12)
