from typing import Annotated

from pydantic import BaseModel, Field

from ..core.config import ColoringParity, ReadoutMode


class SiteRead(BaseModel):
    row: Annotated[int, Field(ge=1)]
    col: Annotated[int, Field(ge=1)]
    qubit: Annotated[int, Field(ge=0)]
    role: Annotated[str, Field(pattern=r"^(blue|yellow|pink)$")]


class LatticeExport(BaseModel):
    """Lattice geometry, roles and interaction edges, as written to ``lattice.json``."""

    m: Annotated[int, Field(ge=1)]
    rows: int
    cols: int
    n: int
    column_base: int
    coloring_parity: ColoringParity
    readout: ReadoutMode
    readout_sites: list[int]
    sites: list[SiteRead]
    edges: list[tuple[int, int]]
    degree: list[int]
    family_size: int
    tool_version: str | None = None
    config_hash: str | None = None
