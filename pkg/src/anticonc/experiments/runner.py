"""
Command implementations independent of argument parsing.

Each ``run_*`` function takes resolved inputs, performs the experiment through the worker
pool and writes its files below ``out_dir``. Outputs depend only on the configuration and
seed, never on the worker count.
"""

import os

import numpy as np

from ..core.config import settings
from ..core.exceptions import InputError, ResourceLimitError, SchemaMismatchError
from ..core.logger import logging
from ..core.rng import Rng
from ..core.utils.io import SAMPLE_COLUMNS, SCAN_COLUMNS, read_csv, write_csv, write_json
from ..core.utils.svg import write_histogram_svg
from ..core.worker.functions import SamplePayload, distribution_task, quench_task, sample_probability_task
from ..core.worker.pool import run_trials
from ..quench.architecture import build_architecture, export_lattice
from ..schemas.ensemble import BrickworkEnsembleSpec, QuenchEnsembleSpec
from ..schemas.experiment import (
    ExperimentConfig,
    ResultRecord,
    StatisticSelection,
    ToleranceOverrides,
    config_hash,
    payload_hash,
)
from ..schemas.report import Report, ScanSummary
from ..stats.anticoncentration import anticonc_fraction, fraction_above, paley_zygmund_check
from ..stats.design import delta2_report, scan_row, summarize_scan
from ..stats.goodness_of_fit import ks_critical_value, ks_porter_thomas
from ..stats.moments import moments_report
from ..stats.sample import ProbSample
from .quench import QuenchTrial, hamiltonian_equivalence_report, marginal_report
from .sampling import OUTCOME_STREAM, SampleRow

logger = logging.getLogger(__name__)

COROLLARY_BOUND = 1.0 / 12.0
QUENCH_COLUMNS = ("trial", "x_L", "x_R", "q", "marginal_deviation")


def apply_tolerances(overrides: ToleranceOverrides) -> None:
    """Apply per-run tolerance overrides to the process settings."""
    if overrides.significance is not None:
        settings.SIGNIFICANCE = overrides.significance
        settings.KS_CRITICAL_VALUE = ks_critical_value(overrides.significance)
    if overrides.se_slack is not None:
        settings.SE_SLACK = overrides.se_slack
    if overrides.design_tolerance is not None:
        settings.DESIGN_TOLERANCE = overrides.design_tolerance


def output_dir(out: str | None) -> str:
    return out or settings.OUTPUT_DIR


def run_id(prefix: str, digest: str) -> str:
    return f"{prefix}-{digest[:12]}"


# -------------- sample --------------
def run_sample(config: ExperimentConfig, out_dir: str | None = None) -> tuple[list[SampleRow], ResultRecord]:
    spec = config.ensemble
    if spec.n > settings.MAX_QUBITS:
        raise ResourceLimitError(f"{spec.n} qubits exceeds the dense limit of {settings.MAX_QUBITS}")
    apply_tolerances(config.tolerances)
    digest = config_hash(config)
    logger.info(f"sample: ensemble={spec.ensemble} n={spec.n} trials={config.trials} seed={config.seed}")

    rows = run_trials(
        sample_probability_task, SamplePayload(spec, config.outcome), config.trials, config.seed, config.threads
    )
    record = ResultRecord(
        run_id=run_id(spec.ensemble, digest),
        tool_version=settings.APP_VERSION,
        config_hash=digest,
        config=config.canonical_payload(),
    )
    target = output_dir(out_dir or config.out)
    write_csv(os.path.join(target, "samples.csv"), SAMPLE_COLUMNS, (r.as_dict() for r in rows), digest)
    write_json(os.path.join(target, "run.json"), record)
    return rows, record


# -------------- analyze --------------
def load_sample(path: str) -> tuple[str, ProbSample]:
    """Read a sample CSV into a :class:`ProbSample`; returns the source config hash too."""
    header, rows = read_csv(path, SAMPLE_COLUMNS)
    if not rows:
        raise SchemaMismatchError(f"{path}: no data rows")
    sizes = {row["n"] for row in rows}
    if len(sizes) != 1:
        raise SchemaMismatchError(f"{path}: mixed qubit counts {sorted(sizes)}")
    try:
        n = int(sizes.pop())
        values = np.array([float(row["p"]) for row in rows])
    except ValueError as exc:
        raise SchemaMismatchError(f"{path}: {exc}") from exc
    return header["hash"], ProbSample(values, 2**n)


def analyze_sample(sample: ProbSample, selection: StatisticSelection) -> list[Report]:
    chosen = selection
    if not any((chosen.moments, chosen.anticonc, chosen.paley_zygmund, chosen.ks_porter_thomas, chosen.design)):
        chosen = selection.model_copy(update={"moments": True, "anticonc": True, "ks_porter_thomas": True})
    reports = []
    if chosen.moments:
        reports.append(moments_report(sample))
    if chosen.anticonc:
        reports.append(anticonc_fraction(sample, chosen.alpha, chosen.epsilon))
    if chosen.paley_zygmund:
        reports.append(paley_zygmund_check(sample, chosen.alpha))
    if chosen.ks_porter_thomas:
        reports.append(ks_porter_thomas(sample))
    if chosen.design:
        reports.append(delta2_report(sample))
    return reports


def run_analyze(
    csv_path: str,
    selection: StatisticSelection,
    out_dir: str | None = None,
    svg_path: str | None = None,
) -> ResultRecord:
    source_hash, sample = load_sample(csv_path)
    reports = analyze_sample(sample, selection)
    for report in reports:
        logger.info(f"{report.statistic}: estimate={report.estimate:.6g} verdict={report.verdict.value}")
    record = ResultRecord(
        run_id=run_id("analyze", source_hash),
        tool_version=settings.APP_VERSION,
        config_hash=source_hash,
        config={"input": os.path.basename(csv_path), "statistics": selection.model_dump(mode="json")},
        reports=reports,
    )
    write_json(os.path.join(output_dir(out_dir), "report.json"), record)
    if svg_path:
        write_histogram_svg(
            svg_path,
            sample.values,
            sample.N,
            title=f"N p histogram ({sample.count} values)",
            config_hash=source_hash,
        )
    return record


# -------------- quench --------------
def corollary_report(trials: list[QuenchTrial], m: int) -> Report:
    values = np.array([t.q for t in trials])
    report = fraction_above(
        ProbSample(values, 2**m), 2.0 ** -(m + 1), COROLLARY_BOUND, rule="se", statistic="conditional_anticonc"
    )
    report.parameters["m"] = m
    return report


def run_quench(
    spec: QuenchEnsembleSpec,
    trials: int,
    seed: int,
    out_dir: str | None = None,
    threads: int | None = None,
    verify_hamiltonian: bool = False,
) -> tuple[list[QuenchTrial], ResultRecord]:
    if spec.m > settings.MAX_EXACT_M:
        raise ResourceLimitError(f"Exact quench runs are limited to m <= {settings.MAX_EXACT_M}, got m={spec.m}")
    config = ExperimentConfig(ensemble=spec, trials=trials, seed=seed, outcome="random")
    digest = config_hash(config)
    lattice_export = export_lattice(*build_architecture(spec)).model_copy(
        update={"tool_version": settings.APP_VERSION, "config_hash": digest}
    )

    results = run_trials(quench_task, spec, trials, seed, threads)
    reports = [marginal_report(results, spec.m), corollary_report(results, spec.m)]
    if verify_hamiltonian:
        reports.append(hamiltonian_equivalence_report(spec))

    record = ResultRecord(
        run_id=run_id("quench", digest),
        tool_version=settings.APP_VERSION,
        config_hash=digest,
        config=config.canonical_payload(),
        reports=reports,
        extra={"family_size": lattice_export.family_size},
    )
    target = output_dir(out_dir)
    write_json(os.path.join(target, "lattice.json"), lattice_export)
    rows = (
        {"trial": t.trial, "x_L": t.x_L, "x_R": t.x_R, "q": t.q, "marginal_deviation": t.max_marginal_deviation}
        for t in results
    )
    write_csv(os.path.join(target, "quench.csv"), QUENCH_COLUMNS, rows, digest)
    write_json(os.path.join(target, "quench.json"), record)
    return results, record


# -------------- scan-depth --------------
def scan_depths(
    template: BrickworkEnsembleSpec,
    depths: list[int],
    trials: int,
    seed: int,
    threads: int | None = None,
    alpha: float = 0.5,
) -> ScanSummary:
    """Parallel counterpart of :func:`~..stats.design.design_convergence_scan` with identical streams."""
    if depths != sorted(depths):
        raise InputError(f"Depths must be sorted ascending, got {depths}")
    root = Rng(seed)
    rows = []
    for k, depth in enumerate(depths):
        row_rng = root.substream(k)
        spec = template.model_copy(update={"depth": depth})
        distributions = np.array(run_trials(distribution_task, spec, trials, row_rng.seed, threads))
        outcomes = np.array(
            [
                int(row_rng.substream(t).substream(OUTCOME_STREAM).integers(0, distributions.shape[1]))
                for t in range(trials)
            ]
        )
        row = scan_row(depth, distributions, outcomes, alpha)
        logger.info(f"scan depth={depth}: delta2={row.delta2:.4f} (se {row.se:.4f}), frac={row.frac:.3f}")
        rows.append(row)
    return summarize_scan(rows)


def run_scan(
    template: BrickworkEnsembleSpec,
    depths: list[int],
    trials: int,
    seed: int,
    out_dir: str | None = None,
    threads: int | None = None,
    alpha: float = 0.5,
) -> tuple[ScanSummary, ResultRecord]:
    config = ExperimentConfig(
        ensemble=template, trials=trials, seed=seed, outcome="random", statistics=StatisticSelection(alpha=alpha)
    )
    echoed = {**config.canonical_payload(), "depths": depths}
    digest = payload_hash(echoed)
    summary = scan_depths(template, depths, trials, seed, threads, alpha)
    record = ResultRecord(
        run_id=run_id("scan", digest),
        tool_version=settings.APP_VERSION,
        config_hash=digest,
        config=echoed,
        extra={"scan": summary.model_dump(mode="json")},
    )
    target = output_dir(out_dir)
    write_csv(os.path.join(target, "scan.csv"), SCAN_COLUMNS, (row.model_dump() for row in summary.rows), digest)
    write_json(os.path.join(target, "scan.json"), record)
    return summary, record
