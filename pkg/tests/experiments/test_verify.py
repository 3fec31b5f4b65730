import json
import os

import pytest

from src.anticonc.core.config import settings
from src.anticonc.core.exceptions import InputError, ZeroMarginalError
from src.anticonc.core.rng import Rng
from src.anticonc.experiments import verify
from src.anticonc.experiments.verify import CRITERIA, SIZES, haar_overlaps, run_suite, run_verify, summary_table
from src.anticonc.schemas.report import ScanRow, Verdict
from src.anticonc.stats.design import summarize_scan


class TestHaarOverlaps:
    def test_chunks_cover_draws(self, mocker):
        mocker.patch.object(verify, "HAAR_CHUNK", 7)
        values = haar_overlaps(4, 20, Rng(1))
        assert values.shape == (20,)
        assert ((values >= 0) & (values <= 1)).all()

    def test_gue_construction(self):
        assert haar_overlaps(4, 10, Rng(1), construction="gue").shape == (10,)


class TestRunSuite:
    """Criterion selection and verdict collection."""

    def test_criteria_are_numbered(self):
        assert len(CRITERIA) == 12
        assert set(SIZES) == {"fast", "full"}

    def test_selected_criteria_pass(self):
        results = run_suite("fast", threads=1, only=[6, 11])
        assert [r.criterion for r in results] == [6, 11]
        assert all(r.verdict == Verdict.PASS for r in results)

    def test_error_becomes_failure(self, mocker):
        def broken(sizes, rng, threads):
            raise ZeroMarginalError("zero marginal at row 0")

        mocker.patch.object(verify, "CRITERIA", [("broken", broken)])
        (result,) = run_suite("fast")
        assert result.verdict == Verdict.FAIL
        assert result.message == "zero marginal at row 0"

    def test_summary_table(self):
        results = run_suite("fast", threads=1, only=[6])
        table = summary_table(results)
        assert "hamiltonian vs cz" in table
        assert table.endswith("1/1 criteria passed")


class TestRunVerify:
    def test_writes_verify_json_without_timings(self, out_dir):
        results, record = run_verify("fast", out_dir, threads=1, only=[11])
        with open(os.path.join(out_dir, "verify.json"), encoding="utf-8") as handle:
            data = json.load(handle)
        assert data["config"]["criteria"] == [11]
        assert "seconds" not in data["criteria"][0]
        assert record.run_id.startswith("verify-fast-")

    def test_unknown_suite(self, out_dir):
        with pytest.raises(InputError):
            run_verify("huge", out_dir)


class TestCriteria:
    """Individual criteria on the fast sizes."""

    def test_quench_equivalence_criterion(self):
        (result,) = run_suite("fast", threads=1, only=[9])
        assert result.verdict == Verdict.PASS
        statistics = [r.statistic for r in result.reports]
        assert statistics == ["two_sample_ks", "exact_law_distance", "exact_law_distance"]
        assert result.reports[0].parameters["tie_tolerance"] == settings.KS_TIE_TOLERANCE
        assert [r.parameters["m"] for r in result.reports[1:]] == [1, 2]

    def test_monotonicity_names_slack(self, mocker):
        rows = [
            ScanRow(depth=0, delta2=3.5, se=0.01, frac=0.1, frac_se=0.01, verdict=Verdict.FAIL),
            ScanRow(depth=6, delta2=0.05, se=0.02, frac=0.6, frac_se=0.01, verdict=Verdict.PASS),
            ScanRow(depth=24, delta2=0.06, se=0.02, frac=0.62, frac_se=0.01, verdict=Verdict.PASS),
        ]
        mocker.patch.object(verify, "scan_depths", return_value=summarize_scan(rows))
        reports, _ = verify.monotonicity_criterion(SIZES["fast"], Rng(0), 1)
        trend = reports[0]
        assert trend.passed
        assert trend.parameters["se_slack"] == settings.SE_SLACK
        assert f"{settings.SE_SLACK}*hypot" in trend.rule
        assert trend.details["strictly_decreasing"] is False
