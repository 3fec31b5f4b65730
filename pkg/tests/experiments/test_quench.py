import numpy as np
import pytest

from src.anticonc.core.rng import Rng
from src.anticonc.experiments.quench import (
    QuenchTrial,
    discrete_law,
    exact_equivalence_report,
    hamiltonian_equivalence_report,
    iqp_probability_law,
    law_distance,
    marginal_report,
    quench_conditional_law,
    quench_trial,
)
from src.anticonc.experiments.runner import corollary_report
from src.anticonc.schemas.ensemble import QuenchEnsembleSpec
from src.anticonc.schemas.report import Verdict


def _trial(deviation: float) -> QuenchTrial:
    return QuenchTrial(0, (0,), (1,), deviation, "0", "1", 0.5, (0.5, 0.5))


class TestQuenchTrial:
    """One quench input with its conditional readout distribution."""

    @pytest.mark.parametrize("m", [1, 2])
    def test_trial_shapes(self, m):
        spec = QuenchEnsembleSpec(m=m)
        trial = quench_trial(spec, 3, Rng(12))
        assert trial.trial == 3
        assert len(trial.x_R) == m
        assert len(trial.x_L) == spec.n - m
        assert len(trial.conditional) == 2**m
        assert sum(trial.conditional) == pytest.approx(1.0)
        assert trial.q == pytest.approx(trial.conditional[int(trial.x_R, 2)])

    def test_marginal_is_uniform(self):
        trial = quench_trial(QuenchEnsembleSpec(m=2), 0, Rng(1))
        assert trial.max_marginal_deviation < 1e-10

    def test_reproducible(self):
        spec = QuenchEnsembleSpec(m=1)
        assert quench_trial(spec, 0, Rng(6)) == quench_trial(spec, 0, Rng(6))

    def test_q_values_vary(self):
        spec = QuenchEnsembleSpec(m=2)
        values = {round(quench_trial(spec, t, Rng(0).substream(t)).q, 12) for t in range(20)}
        assert len(values) > 1


class TestReports:
    """Hamiltonian equivalence and marginal uniformity reports."""

    @pytest.mark.parametrize("m", [1, 2])
    def test_hamiltonian_matches_cz(self, m):
        report = hamiltonian_equivalence_report(QuenchEnsembleSpec(m=m))
        assert report.passed
        assert report.count == 2 ** QuenchEnsembleSpec(m=m).n

    def test_marginal_report_pass(self):
        report = marginal_report([_trial(1e-13), _trial(2e-12)], m=1)
        assert report.passed
        assert report.estimate == pytest.approx(2e-12)

    def test_marginal_report_fail(self):
        assert marginal_report([_trial(1e-3)], m=1).verdict == Verdict.FAIL

    def test_marginal_report_empty(self):
        assert marginal_report([], m=1).estimate == 0.0
        assert np.isfinite(marginal_report([], m=1).estimate)


class TestConditionalAnticoncentration:
    """Anticoncentration of the conditional readout distribution."""

    def test_fraction_at_least_one_twelfth(self):
        spec = QuenchEnsembleSpec(m=2)
        trials = [quench_trial(spec, t, Rng(30).substream(t)) for t in range(300)]
        report = corollary_report(trials, 2)
        assert report.passed
        assert report.reference == pytest.approx(1 / 12)

    def test_exact_fraction_at_least_one_twelfth(self):
        law = quench_conditional_law(QuenchEnsembleSpec(m=2))
        assert law.masses[law.atoms >= 2.0**-3 - 1e-12].sum() >= 1 / 12

    def test_m3_marginal_is_uniform(self):
        trial = quench_trial(QuenchEnsembleSpec(m=3), 0, Rng(31))
        assert trial.max_marginal_deviation < 1e-10
        assert sum(trial.conditional) == pytest.approx(1.0)


class TestDiscreteLaw:
    """Atoms, masses and CDF distance of pooled probability values."""

    def test_merges_rounding_noise(self):
        law = discrete_law(np.array([0.5, 0.49999999999999994, 0.25, 0.0, 1e-17]))
        np.testing.assert_allclose(law.atoms, [0.0, 0.25, 0.49999999999999994])
        np.testing.assert_allclose(law.masses, [0.4, 0.2, 0.4])

    def test_distance_ignores_multiplicity(self):
        a = discrete_law(np.array([0.0, 1.0]))
        b = discrete_law(np.array([0.0, 0.0, 1.0, 1.0]))
        assert law_distance(a, b) == 0.0

    def test_distance_of_disjoint_laws(self):
        a = discrete_law(np.array([0.0, 1.0]))
        b = discrete_law(np.array([0.5]))
        assert law_distance(a, b) == pytest.approx(0.5)
        assert law_distance(b, a) == pytest.approx(0.5)


class TestExactEquivalence:
    """The pooled quench conditional law equals the dense IQP output law, by full enumeration."""

    @pytest.mark.parametrize("m", [1, 2])
    def test_laws_agree(self, m):
        report = exact_equivalence_report(m)
        assert report.passed
        assert report.estimate < 1e-9
        assert report.details["quench_atoms"] == report.details["iqp_atoms"]

    def test_single_qubit_law(self):
        """cos^2(k pi/8) over k in Z_8: atoms 0, 0.146, 0.5, 0.854, 1 with masses 1/8, 1/4, 1/4, 1/4, 1/8."""
        quench = quench_conditional_law(QuenchEnsembleSpec(m=1))
        iqp = iqp_probability_law(1)
        expected = np.cos(np.arange(8) * np.pi / 8) ** 2
        np.testing.assert_allclose(iqp.atoms, np.unique(np.round(expected, 12)), atol=1e-12)
        np.testing.assert_allclose(iqp.masses, [0.125, 0.25, 0.25, 0.25, 0.125])
        np.testing.assert_allclose(quench.atoms, iqp.atoms, atol=1e-12)
        np.testing.assert_allclose(quench.masses, iqp.masses)

    def test_iqp_law_mean(self):
        law = iqp_probability_law(2)
        assert float(np.dot(law.atoms, law.masses)) == pytest.approx(0.25)
