from dataclasses import dataclass, field

import numpy as np

from ..core.exceptions import InputError
from ..schemas.experiment import SampleMetadata

PROBABILITY_SLACK = 1e-12


@dataclass(frozen=True)
class ProbSample:
    """Batch of output probabilities over a space of dimension ``N``."""

    values: np.ndarray
    N: int
    metadata: SampleMetadata | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float).reshape(-1)
        if values.size < 1:
            raise InputError("A probability sample needs at least one value")
        if self.N < 1:
            raise InputError(f"Dimension must be at least 1, got {self.N}")
        if np.any(values < -PROBABILITY_SLACK) or np.any(values > 1 + PROBABILITY_SLACK):
            raise InputError("Probability values must lie in [0, 1]")
        object.__setattr__(self, "values", np.clip(values, 0.0, 1.0))

    @property
    def count(self) -> int:
        return int(self.values.size)

    @classmethod
    def from_values(cls, values: "np.ndarray | list[float]", N: int, **metadata: object) -> "ProbSample":
        meta = SampleMetadata(**metadata) if metadata else None  # type: ignore[arg-type]
        return cls(np.asarray(values, dtype=float), N, meta)
