import hashlib
import json
from typing import Annotated, Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .ensemble import EnsembleSpec
from .report import CriterionResult, Report


class SampleMetadata(BaseModel):
    ensemble: str
    n: Annotated[int, Field(ge=1)]
    depth: int | None = None
    seed: int
    outcome: str = "zero"


class StatisticSelection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    moments: bool = False
    anticonc: bool = False
    paley_zygmund: bool = False
    ks_porter_thomas: bool = False
    design: bool = False
    alpha: Annotated[float, Field(ge=0, le=1, default=0.5)]
    epsilon: Annotated[float, Field(ge=0, lt=1, default=0.1)]


class ToleranceOverrides(BaseModel):
    model_config = ConfigDict(extra="forbid")

    significance: Annotated[float, Field(gt=0, lt=1)] | None = None
    se_slack: float | None = None
    design_tolerance: float | None = None


class ExperimentConfigBase(BaseModel):
    ensemble: EnsembleSpec
    trials: Annotated[int, Field(ge=1, examples=[1000])]
    seed: Annotated[int, Field(ge=0, lt=2**64, examples=[7])]


class ExperimentConfig(ExperimentConfigBase):
    """Fully resolved run configuration; echoed into every output file."""

    model_config = ConfigDict(extra="forbid")

    outcome: Annotated[str, Field(default="zero", examples=["zero", "random", "0101"])]
    out: str | None = None
    threads: Annotated[int | None, Field(ge=1, default=None)]
    statistics: StatisticSelection = Field(default_factory=StatisticSelection)
    tolerances: ToleranceOverrides = Field(default_factory=ToleranceOverrides)

    @field_validator("outcome")
    @classmethod
    def check_outcome(cls, value: str) -> str:
        if value in ("zero", "random") or (value and set(value) <= {"0", "1"}):
            return value
        raise ValueError(f"outcome must be 'zero', 'random' or a bitstring, got '{value}'")

    def canonical_payload(self) -> dict[str, Any]:
        # output location and worker count never change results
        return self.model_dump(mode="json", exclude={"out", "threads"})

    def canonical_json(self) -> str:
        return canonical_json(self.canonical_payload())


def canonical_json(payload: dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def payload_hash(payload: dict[str, Any]) -> str:
    return hashlib.sha256(canonical_json(payload).encode("utf-8")).hexdigest()


def config_hash(config: ExperimentConfig) -> str:
    return payload_hash(config.canonical_payload())


class ResultRecord(BaseModel):
    run_id: str
    tool_version: str
    config_hash: str
    config: dict[str, Any]
    reports: list[Report] = Field(default_factory=list)
    criteria: list[CriterionResult] = Field(default_factory=list)
    extra: dict[str, Any] = Field(default_factory=dict)
