import numpy as np
import pytest

from src.anticonc.core.exceptions import InputError
from src.anticonc.core.rng import Rng
from src.anticonc.numerics.random_matrix import sample_porter_thomas
from src.anticonc.stats.goodness_of_fit import (
    chi_square_uniformity,
    ks_calibration,
    ks_critical_value,
    ks_porter_thomas,
    merge_ties,
    two_sample_ks,
)
from src.anticonc.stats.sample import ProbSample


class TestKsPorterThomas:
    """One-sample KS against the Porter-Thomas CDF."""

    def test_haar_data_passes(self, haar_sample):
        report = ks_porter_thomas(haar_sample)
        assert report.passed
        assert report.reference == pytest.approx(1.628 / np.sqrt(haar_sample.count))

    def test_uniform_values_fail(self):
        values = Rng(2).uniform(size=4000) * 0.25
        assert not ks_porter_thomas(ProbSample(values, 8)).passed

    def test_needs_dimension_two(self):
        with pytest.raises(InputError):
            ks_porter_thomas(ProbSample(np.array([0.5, 0.6]), 1))


class TestTwoSampleKs:
    """Two-sample KS with the asymptotic critical value."""

    def test_same_law_passes(self):
        a = sample_porter_thomas(16, 3000, Rng(1))
        b = sample_porter_thomas(16, 3000, Rng(2))
        assert two_sample_ks(a, b).passed

    def test_different_laws_fail(self):
        a = sample_porter_thomas(4, 3000, Rng(1))
        b = sample_porter_thomas(16, 3000, Rng(2))
        assert not two_sample_ks(ProbSample(a, 4), ProbSample(b, 16)).passed

    def test_empty_sample(self):
        with pytest.raises(InputError):
            two_sample_ks(np.array([]), np.array([0.1]))

    def test_tie_tolerance_merges_rounding_noise(self):
        """The same three-atom law, with atoms perturbed at the last bit in one sample."""
        a = np.repeat([0.0, 0.5, 1.0], 1000)
        b = np.repeat([1e-17, 0.49999999999999994, 1.0], 1000)
        assert not two_sample_ks(a, b).passed
        report = two_sample_ks(a, b, tie_tolerance=1e-9)
        assert report.passed
        assert report.estimate == 0.0
        assert report.parameters["tie_tolerance"] == 1e-9


class TestMergeTies:
    """Snapping of near-equal values onto one atom."""

    def test_snaps_onto_smallest_value(self):
        x, y = merge_ties(np.array([0.5, 0.25]), np.array([0.5 - 1e-16, 0.75]), 1e-9)
        np.testing.assert_array_equal(x, [0.5 - 1e-16, 0.25])
        np.testing.assert_array_equal(y, [0.5 - 1e-16, 0.75])

    def test_distinct_values_untouched(self):
        x, y = merge_ties(np.array([0.1, 0.3]), np.array([0.2]), 1e-9)
        np.testing.assert_array_equal(x, [0.1, 0.3])
        np.testing.assert_array_equal(y, [0.2])


class TestKsCriticalValue:
    """Asymptotic Kolmogorov constant."""

    @pytest.mark.parametrize("significance, expected", [(0.01, 1.628), (0.05, 1.358), (0.1, 1.224)])
    def test_known_values(self, significance, expected):
        assert ks_critical_value(significance) == pytest.approx(expected, abs=1e-3)

    @pytest.mark.parametrize("significance", [0.0, 1.0, -0.1])
    def test_rejects_out_of_range(self, significance):
        with pytest.raises(InputError):
            ks_critical_value(significance)


class TestChiSquareUniformity:
    """Pearson chi-square against the uniform law."""

    def test_balanced_counts_pass(self):
        assert chi_square_uniformity([100, 98, 103, 99]).passed

    def test_skewed_counts_fail(self):
        assert not chi_square_uniformity([200, 50, 50, 100]).passed

    def test_needs_two_categories(self):
        with pytest.raises(InputError):
            chi_square_uniformity([10])


class TestKsCalibration:
    """Rejection rate on null data."""

    def test_rate_is_small(self):
        report = ks_calibration(8, 1000, 100, Rng(5))
        assert report.passed
        assert report.estimate <= 0.03
