import numpy as np
import pytest

from src.anticonc.core.exceptions import InputError
from src.anticonc.stats.sample import ProbSample


class TestProbSample:
    """Validation of probability batches."""

    def test_clips_rounding_noise(self):
        s = ProbSample(np.array([-1e-13, 0.5, 1 + 1e-13]), 2)
        assert s.values.min() == 0.0 and s.values.max() == 1.0
        assert s.count == 3

    @pytest.mark.parametrize("values", [[], [0.5, 1.5], [-0.1]])
    def test_rejects_invalid_values(self, values):
        with pytest.raises(InputError):
            ProbSample(np.array(values, dtype=float), 4)

    def test_rejects_invalid_dimension(self):
        with pytest.raises(InputError):
            ProbSample(np.array([0.5]), 0)

    def test_from_values_with_metadata(self):
        s = ProbSample.from_values([0.1, 0.2], 8, ensemble="haar", n=3, seed=7)
        assert s.metadata.ensemble == "haar"
        assert s.metadata.outcome == "zero"
