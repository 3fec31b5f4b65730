import pytest

from src.anticonc.core.config import ColoringParity, ReadoutMode
from src.anticonc.core.exceptions import InputError
from src.anticonc.quench.lattice import (
    Role,
    assign_roles,
    build_interaction_sublattice,
    build_lattice,
    edge_indicator,
    left_sites,
    readout_sites,
)


@pytest.fixture
def lattice_m2():
    return build_lattice(2, column_base=1, coloring_parity="default", readout="effective")


class TestLatticeSpec:
    """Geometry and site addressing."""

    @pytest.mark.parametrize("m,n", [(1, 3), (2, 10), (3, 21)])
    def test_size(self, m, n):
        assert build_lattice(m).n == n

    def test_row_major_addressing(self, lattice_m2):
        assert lattice_m2.qubit(1, 1) == 0
        assert lattice_m2.qubit(2, 3) == 7
        assert lattice_m2.site(7) == (2, 3)

    def test_out_of_range(self, lattice_m2):
        with pytest.raises(InputError):
            lattice_m2.qubit(3, 1)
        with pytest.raises(InputError):
            lattice_m2.site(10)

    def test_grid_edges(self, lattice_m2):
        assert len(lattice_m2.grid_edges()) == 2 * 4 + 5

    def test_invalid_parameters(self):
        with pytest.raises(InputError):
            build_lattice(0)
        with pytest.raises(InputError):
            build_lattice(2, column_base=2)


class TestAssignRoles:
    """Pink boundary sites and the blue/yellow checkerboard."""

    def test_pink_sites_on_even_row_boundary(self, lattice_m2):
        roles = assign_roles(lattice_m2)
        assert roles.pink == [lattice_m2.qubit(2, 1), lattice_m2.qubit(2, 5)]

    def test_boundary_columns_carry_no_blue(self):
        for m in (1, 2, 3):
            lattice = build_lattice(m, coloring_parity="default")
            roles = assign_roles(lattice)
            for i in range(1, m + 1):
                assert roles[(i, 1)] != Role.BLUE
                assert roles[(i, lattice.cols)] != Role.BLUE

    def test_checkerboard(self, lattice_m2):
        roles = assign_roles(lattice_m2)
        for a, b in lattice_m2.grid_edges():
            if Role.PINK not in (roles[a], roles[b]):
                assert roles[a] != roles[b]

    def test_role_counts_m2(self, lattice_m2):
        roles = assign_roles(lattice_m2)
        assert (len(roles.pink), len(roles.yellow), len(roles.blue)) == (2, 5, 3)

    def test_flipped_parity_swaps_colours(self):
        default = assign_roles(build_lattice(2, coloring_parity=ColoringParity.DEFAULT))
        flipped = assign_roles(build_lattice(2, coloring_parity=ColoringParity.FLIPPED))
        assert flipped.pink == default.pink
        assert flipped.blue == default.yellow
        assert flipped.yellow == default.blue


class TestInteractionSublattice:
    """Periodic removal of vertical edges."""

    def test_horizontal_edges_always_kept(self, lattice_m2):
        roles = assign_roles(lattice_m2)
        assert all(edge_indicator(lattice_m2, roles, a, b) for a, b in lattice_m2.grid_edges() if a[0] == b[0])

    def test_m2_edges(self, lattice_m2):
        sublattice = build_interaction_sublattice(lattice_m2, assign_roles(lattice_m2))
        assert len(sublattice.edges) == 12
        assert (lattice_m2.qubit(1, 4), lattice_m2.qubit(2, 4)) not in sublattice.edges
        assert sum(sublattice.degree) == 24

    def test_column_base_shifts_removals(self):
        one = build_lattice(3, column_base=1)
        zero = build_lattice(3, column_base=0)
        edges_one = build_interaction_sublattice(one, assign_roles(one)).edges
        edges_zero = build_interaction_sublattice(zero, assign_roles(zero)).edges
        assert edges_one != edges_zero


class TestReadoutSites:
    """Split of the lattice into x_R and x_L."""

    def test_effective_readout_skips_pink(self, lattice_m2):
        assert readout_sites(lattice_m2) == [lattice_m2.qubit(1, 5), lattice_m2.qubit(2, 4)]

    def test_literal_readout(self, lattice_m2):
        assert readout_sites(lattice_m2, ReadoutMode.LITERAL) == [lattice_m2.qubit(1, 5), lattice_m2.qubit(2, 5)]

    def test_left_is_complement(self, lattice_m2):
        left = left_sites(lattice_m2)
        assert len(left) == 8
        assert sorted(left + readout_sites(lattice_m2)) == list(range(10))
