from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field

from ..core.config import ColoringParity, ReadoutMode, settings


class EnsembleBase(BaseModel):
    model_config = ConfigDict(extra="forbid")


class HaarEnsembleSpec(EnsembleBase):
    ensemble: Literal["haar"] = "haar"
    qubits: Annotated[int, Field(ge=1, le=24, examples=[3])]

    @property
    def n(self) -> int:
        return self.qubits


class BrickworkEnsembleSpec(EnsembleBase):
    ensemble: Literal["brickwork"] = "brickwork"
    qubits: Annotated[int, Field(ge=2, le=24, examples=[6])]
    depth: Annotated[int, Field(ge=0, examples=[96])]
    source: Annotated[str, Field(default="haar", pattern=r"^(haar|bis)$", examples=["haar", "bis"])]
    epsilon: Annotated[float, Field(gt=0, lt=1, default_factory=lambda: settings.DEFAULT_EPSILON)]

    @property
    def n(self) -> int:
        return self.qubits


class IqpEnsembleSpec(EnsembleBase):
    ensemble: Literal["iqp"] = "iqp"
    qubits: Annotated[int, Field(ge=1, le=24, examples=[3])]

    @property
    def n(self) -> int:
        return self.qubits


class DiagonalEnsembleSpec(EnsembleBase):
    ensemble: Literal["diagonal"] = "diagonal"
    qubits: Annotated[int, Field(ge=1, le=24, examples=[4])]
    structure: Literal["complete", "chain"] = "complete"
    pair_phases: tuple[float, ...] = (0.0, 3.141592653589793)
    single_phases: tuple[float, ...] = (0.0, 2.0943951023931953, 4.1887902047863905)

    @property
    def n(self) -> int:
        return self.qubits


class QuenchEnsembleSpec(EnsembleBase):
    ensemble: Literal["quench"] = "quench"
    m: Annotated[int, Field(ge=1, examples=[2])]
    column_base: Annotated[int, Field(ge=0, le=1, default_factory=lambda: settings.COLUMN_BASE)]
    coloring_parity: ColoringParity = Field(default_factory=lambda: settings.COLORING_PARITY)
    readout: ReadoutMode = Field(default_factory=lambda: settings.READOUT)

    @property
    def n(self) -> int:
        return self.m * (2 * self.m + 1)


EnsembleSpec = Annotated[
    HaarEnsembleSpec | BrickworkEnsembleSpec | IqpEnsembleSpec | DiagonalEnsembleSpec | QuenchEnsembleSpec,
    Field(discriminator="ensemble"),
]
