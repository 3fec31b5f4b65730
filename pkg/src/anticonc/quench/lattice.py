"""
Geometry of the quench architecture: an m x (2m+1) grid, site roles and the interaction edges.

Sites are addressed 1-based as ``[i, j]`` (row ``i``, column ``j``) and map to qubit
``(i-1)(2m+1) + (j-1)``, i.e. row-major order.
"""

from dataclasses import dataclass, field
from enum import Enum

from ..core.config import ColoringParity, ReadoutMode, settings
from ..core.exceptions import InputError


class Role(str, Enum):
    BLUE = "blue"
    YELLOW = "yellow"
    PINK = "pink"


@dataclass(frozen=True)
class LatticeSpec:
    m: int
    column_base: int = field(default_factory=lambda: settings.COLUMN_BASE)
    coloring_parity: ColoringParity = field(default_factory=lambda: settings.COLORING_PARITY)
    readout: ReadoutMode = field(default_factory=lambda: settings.READOUT)

    def __post_init__(self) -> None:
        if self.m < 1:
            raise InputError(f"Lattice width parameter m must be at least 1, got {self.m}")
        if self.column_base not in (0, 1):
            raise InputError(f"Column base must be 0 or 1, got {self.column_base}")
        object.__setattr__(self, "coloring_parity", ColoringParity(self.coloring_parity))
        object.__setattr__(self, "readout", ReadoutMode(self.readout))

    @property
    def rows(self) -> int:
        return self.m

    @property
    def cols(self) -> int:
        return 2 * self.m + 1

    @property
    def n(self) -> int:
        return self.rows * self.cols

    def qubit(self, i: int, j: int) -> int:
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise InputError(f"Site [{i},{j}] is outside the {self.rows}x{self.cols} lattice")
        return (i - 1) * self.cols + (j - 1)

    def site(self, qubit: int) -> tuple[int, int]:
        if not 0 <= qubit < self.n:
            raise InputError(f"Qubit {qubit} is outside the lattice of {self.n} sites")
        return qubit // self.cols + 1, qubit % self.cols + 1

    def sites(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.rows + 1) for j in range(1, self.cols + 1)]

    def grid_edges(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """Nearest-neighbour edges ``([i,j],[k,l])`` with ``i <= k`` and ``j <= l``."""
        edges = []
        for i, j in self.sites():
            if j < self.cols:
                edges.append(((i, j), (i, j + 1)))
            if i < self.rows:
                edges.append(((i, j), (i + 1, j)))
        return edges


@dataclass(frozen=True)
class SiteRoles:
    """Role of every site, indexed by qubit."""

    lattice: LatticeSpec
    roles: tuple[Role, ...]

    def __getitem__(self, site: tuple[int, int]) -> Role:
        return self.roles[self.lattice.qubit(*site)]

    def qubits_with(self, role: Role) -> list[int]:
        return [q for q, r in enumerate(self.roles) if r == role]

    @property
    def pink(self) -> list[int]:
        return self.qubits_with(Role.PINK)

    @property
    def yellow(self) -> list[int]:
        return self.qubits_with(Role.YELLOW)

    @property
    def blue(self) -> list[int]:
        return self.qubits_with(Role.BLUE)


@dataclass(frozen=True)
class InteractionSublattice:
    lattice: LatticeSpec
    edges: tuple[tuple[int, int], ...]

    @property
    def degree(self) -> tuple[int, ...]:
        deg = [0] * self.lattice.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)


def build_lattice(
    m: int,
    column_base: int | None = None,
    coloring_parity: ColoringParity | str | None = None,
    readout: ReadoutMode | str | None = None,
) -> LatticeSpec:
    return LatticeSpec(
        m=m,
        column_base=settings.COLUMN_BASE if column_base is None else column_base,
        coloring_parity=ColoringParity(coloring_parity or settings.COLORING_PARITY),
        readout=ReadoutMode(readout or settings.READOUT),
    )


def is_pink(lattice: LatticeSpec, i: int, j: int) -> bool:
    return i % 2 == 0 and j in (1, lattice.cols)


def assign_roles(lattice: LatticeSpec) -> SiteRoles:
    """Pink on even-row boundary sites; blue/yellow checkerboard elsewhere.

    The checkerboard starts with blue on even ``i + j`` and is flipped when that leaves blue
    sites in column 1 or column 2m+1. ``ColoringParity.FLIPPED`` selects the complementary
    checkerboard.
    """
    blue_parity = 0
    for i, j in lattice.sites():
        if not is_pink(lattice, i, j) and j in (1, lattice.cols) and (i + j) % 2 == blue_parity:
            blue_parity = 1
            break
    if lattice.coloring_parity == ColoringParity.FLIPPED:
        blue_parity ^= 1

    roles = []
    for i, j in lattice.sites():
        if is_pink(lattice, i, j):
            roles.append(Role.PINK)
        elif (i + j) % 2 == blue_parity:
            roles.append(Role.BLUE)
        else:
            roles.append(Role.YELLOW)
    return SiteRoles(lattice, tuple(roles))


def edge_indicator(lattice: LatticeSpec, roles: SiteRoles, a: tuple[int, int], b: tuple[int, int]) -> int:
    """1 if the grid edge ``(a, b)`` interacts, 0 if it is removed.

    Only vertical edges can be removed: those whose upper site is blue in a column
    congruent to 0 mod 4, or yellow in a column congruent to 2 mod 4.
    """
    (i, j), (k, _) = a, b
    if i == k:
        return 1
    column = j if lattice.column_base == 1 else j - 1
    role = roles[a]
    if column % 4 == 0 and role == Role.BLUE:
        return 0
    if column % 4 == 2 and role == Role.YELLOW:
        return 0
    return 1


def build_interaction_sublattice(lattice: LatticeSpec, roles: SiteRoles) -> InteractionSublattice:
    edges = tuple(
        (lattice.qubit(*a), lattice.qubit(*b))
        for a, b in lattice.grid_edges()
        if edge_indicator(lattice, roles, a, b)
    )
    return InteractionSublattice(lattice, edges)


def readout_sites(lattice: LatticeSpec, mode: ReadoutMode | str | None = None) -> list[int]:
    """Qubits whose outcomes form x_R, one per row, top to bottom.

    ``literal`` reads column 2m+1 in every row. ``effective`` reads the last non-pink site of
    each row, which is column 2m on even rows where column 2m+1 is pink.
    """
    mode = ReadoutMode(mode or lattice.readout)
    sites = []
    for i in range(1, lattice.rows + 1):
        j = lattice.cols
        if mode == ReadoutMode.EFFECTIVE and is_pink(lattice, i, j):
            j -= 1
        sites.append(lattice.qubit(i, j))
    return sites


def left_sites(lattice: LatticeSpec, mode: ReadoutMode | str | None = None) -> list[int]:
    """Complement of :func:`readout_sites` in row-major order."""
    right = set(readout_sites(lattice, mode))
    return [q for q in range(lattice.n) if q not in right]
