from enum import Enum
from typing import Annotated, Any

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


class ReportBase(BaseModel):
    statistic: Annotated[str, Field(examples=["anticonc_fraction"])]
    estimate: float
    reference: float | None = None
    verdict: Verdict


class Report(ReportBase):
    """Outcome of one statistic: estimate, uncertainty, reference value and verdict."""

    model_config = ConfigDict(extra="forbid")

    standard_error: float | None = None
    ci_low: float | None = None
    ci_high: float | None = None
    count: Annotated[int, Field(ge=0, default=0)]
    rule: Annotated[str, Field(default="", examples=["ci_low >= reference"])]
    parameters: dict[str, Any] = Field(default_factory=dict)
    details: dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_interval(self) -> "Report":
        if self.ci_low is not None and self.ci_high is not None and self.ci_low > self.ci_high:
            raise ValueError(f"Confidence interval is inverted: [{self.ci_low}, {self.ci_high}]")
        return self

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS


class ScanRow(BaseModel):
    depth: Annotated[int, Field(ge=0)]
    delta2: float
    se: float
    frac: float
    frac_se: float
    verdict: Verdict


class ScanSummary(BaseModel):
    rows: list[ScanRow]
    monotone: bool
    first_converged_depth: int | None = None
    tolerance: float
    slack: float
    strictly_decreasing: bool


class CriterionResult(BaseModel):
    criterion: Annotated[int, Field(ge=1)]
    name: str
    verdict: Verdict
    seconds: float
    sizes: dict[str, Any] = Field(default_factory=dict)
    reports: list[Report] = Field(default_factory=list)
    message: str = ""
