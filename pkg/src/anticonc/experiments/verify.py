"""
Acceptance suites.

``full`` runs every criterion at its published size; ``fast`` runs reduced sizes and finishes
in a few minutes on a laptop. Each criterion draws from ``Rng(VERIFY_SEED).substream(k)``, so
a suite is reproducible end to end.
"""

import os
import time
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any, Literal

import numpy as np

from ..core.config import settings
from ..core.exceptions import AnticoncError, InputError
from ..core.logger import logging
from ..core.rng import Rng
from ..core.utils.io import write_json
from ..core.worker.functions import SamplePayload, distribution_task, quench_task, sample_probability_task
from ..core.worker.pool import run_trials
from ..ensembles.iqp import compose_iqp, iqp_identity, iqp_inverse, iqp_unitary_matrix, sample_dense_iqp
from ..numerics.random_matrix import haar_via_gue, haar_via_qr
from ..schemas.ensemble import BrickworkEnsembleSpec, DiagonalEnsembleSpec, IqpEnsembleSpec, QuenchEnsembleSpec
from ..schemas.experiment import ResultRecord, payload_hash
from ..schemas.report import CriterionResult, Report, Verdict
from ..simulator.gates import dagger, equal_up_to_global_phase
from ..simulator.statevector import apply_gate, zero_state
from ..stats.anticoncentration import fraction_above, paley_zygmund_check, design_anticonc_bound
from ..stats.design import collision_second_moment
from ..stats.goodness_of_fit import ks_calibration, ks_porter_thomas, two_sample_ks
from ..stats.moments import moments_report
from ..stats.sample import ProbSample
from .quench import exact_equivalence_report, hamiltonian_equivalence_report, marginal_report
from .runner import COROLLARY_BOUND, corollary_report, output_dir, run_id, scan_depths
from .sampling import output_distribution

logger = logging.getLogger(__name__)

VERIFY_SEED = 20240601
HAAR_CHUNK = 5000
SUITES = ("fast", "full")

Suite = Literal["fast", "full"]


@dataclass(frozen=True)
class Sizes:
    haar_draws: int
    calibration_count: int
    calibration_repetitions: int
    construction_draws: int
    brickwork_n: int
    brickwork_trials: int
    scan_trials: int
    marginal_betas: dict[int, int]
    corollary_trials: int
    equivalence_trials: int
    iqp_trials: int
    group_pairs: int
    norm_gates: int


SIZES: dict[str, Sizes] = {
    "fast": Sizes(
        haar_draws=20_000,
        calibration_count=2_000,
        calibration_repetitions=100,
        construction_draws=20_000,
        brickwork_n=4,
        brickwork_trials=500,
        scan_trials=200,
        marginal_betas={1: 20, 2: 20, 3: 2},
        corollary_trials=1_000,
        equivalence_trials=2_000,
        iqp_trials=2_000,
        group_pairs=100,
        norm_gates=2_000,
    ),
    "full": Sizes(
        haar_draws=200_000,
        calibration_count=10_000,
        calibration_repetitions=200,
        construction_draws=40_000,
        brickwork_n=6,
        brickwork_trials=2_000,
        scan_trials=1_000,
        marginal_betas={1: 20, 2: 20, 3: 20},
        corollary_trials=5_000,
        equivalence_trials=10_000,
        iqp_trials=10_000,
        group_pairs=1_000,
        norm_gates=10_000,
    ),
}


def haar_overlaps(N: int, draws: int, rng: Rng, construction: str = "qr") -> np.ndarray:
    """|U_00|^2 for ``draws`` Haar unitaries, drawn in chunks."""
    sampler = haar_via_gue if construction == "gue" else haar_via_qr
    values = []
    for k, start in enumerate(range(0, draws, HAAR_CHUNK)):
        u = sampler(N, rng.substream(k), min(HAAR_CHUNK, draws - start))
        values.append(np.abs(u[:, 0, 0]) ** 2)
    return np.concatenate(values)


def _all_pass(reports: list[Report]) -> Verdict:
    return Verdict.PASS if all(r.passed for r in reports) else Verdict.FAIL


# -------------- criteria --------------
def haar_moments_criterion(sizes: Sizes, rng: Rng, threads: int | None) -> tuple[list[Report], dict]:
    sample = ProbSample(haar_overlaps(8, sizes.haar_draws, rng), 8)
    return [moments_report(sample)], {"N": 8, "draws": sizes.haar_draws}


def porter_thomas_criterion(sizes: Sizes, rng: Rng, threads: int | None) -> tuple[list[Report], dict]:
    sample = ProbSample(haar_overlaps(8, sizes.haar_draws, rng.substream(0)), 8)
    calibration = ks_calibration(8, sizes.calibration_count, sizes.calibration_repetitions, rng.substream(1))
    return [ks_porter_thomas(sample), calibration], {
        "N": 8,
        "draws": sizes.haar_draws,
        "calibration": [sizes.calibration_repetitions, sizes.calibration_count],
    }


def construction_criterion(sizes: Sizes, rng: Rng, threads: int | None) -> tuple[list[Report], dict]:
    qr = haar_overlaps(4, sizes.construction_draws, rng.substream(0), "qr")
    gue = haar_overlaps(4, sizes.construction_draws, rng.substream(1), "gue")
    return [two_sample_ks(qr, gue), ks_porter_thomas(ProbSample(gue, 4))], {"N": 4, "draws": sizes.construction_draws}


def brickwork_criterion(sizes: Sizes, rng: Rng, threads: int | None) -> tuple[list[Report], dict]:
    n = sizes.brickwork_n
    N = 2**n
    spec = BrickworkEnsembleSpec(qubits=n, depth=16 * n, source="haar")
    distributions = np.array(run_trials(distribution_task, spec, sizes.brickwork_trials, rng.seed, threads))
    p = ProbSample(distributions[:, 0], N)
    fraction = fraction_above(
        p, 0.5 / N, design_anticonc_bound(0.5, 0.1), rule="wilson", statistic="brickwork_anticonc"
    )
    second, se_second = collision_second_moment(distributions)
    scale = N * (N + 1) / 2
    delta2 = second * scale - 1
    design = Report(
        statistic="delta2_collision",
        estimate=delta2,
        standard_error=se_second * scale,
        reference=0.0,
        verdict=Verdict.PASS if abs(delta2) <= 0.1 else Verdict.FAIL,
        count=len(distributions),
        rule="|delta2| <= 0.1",
        parameters={"N": N},
    )
    return [fraction, design], {"n": n, "depth": 16 * n, "circuits": sizes.brickwork_trials}


def monotonicity_criterion(sizes: Sizes, rng: Rng, threads: int | None) -> tuple[list[Report], dict]:
    n = 6
    depths = [0, n, 4 * n, 16 * n]
    summary = scan_depths(BrickworkEnsembleSpec(qubits=n, depth=0), depths, sizes.scan_trials, rng.seed, threads)
    first, last = summary.rows[0], summary.rows[-1]
    reports = [
        Report(
            statistic="delta2_trend",
            estimate=last.delta2,
            standard_error=last.se,
            reference=first.delta2,
            verdict=Verdict.PASS if summary.monotone and last.delta2 < first.delta2 else Verdict.FAIL,
            count=sizes.scan_trials,
            rule=f"delta2[k+1] <= delta2[k] + {summary.slack}*hypot(se[k], se[k+1]), last < first",
            parameters={"se_slack": summary.slack},
            details={
                "strictly_decreasing": summary.strictly_decreasing,
                "rows": [r.model_dump(mode="json") for r in summary.rows],
            },
        ),
        Report(
            statistic="fraction_at_depth",
            estimate=last.frac,
            standard_error=last.frac_se,
            reference=0.5,
            verdict=Verdict.PASS if last.frac >= 0.5 and first.frac < 0.5 else Verdict.FAIL,
            count=sizes.scan_trials,
            rule="frac(16n) >= 0.5 > frac(0)",
            details={"frac_depth0": first.frac},
        ),
    ]
    return reports, {"n": n, "depths": depths, "trials": sizes.scan_trials}


def hamiltonian_criterion(sizes: Sizes, rng: Rng, threads: int | None) -> tuple[list[Report], dict]:
    return [hamiltonian_equivalence_report(QuenchEnsembleSpec(m=m)) for m in (1, 2)], {"m": [1, 2]}


def marginal_criterion(sizes: Sizes, rng: Rng, threads: int | None) -> tuple[list[Report], dict]:
    reports = []
    for m, betas in sizes.marginal_betas.items():
        trials = run_trials(quench_task, QuenchEnsembleSpec(m=m), betas, rng.substream(m).seed, threads, chunk_size=1)
        reports.append(marginal_report(trials, m))
    return reports, {"betas": sizes.marginal_betas}


def corollary_criterion(sizes: Sizes, rng: Rng, threads: int | None) -> tuple[list[Report], dict]:
    trials = run_trials(quench_task, QuenchEnsembleSpec(m=2), sizes.corollary_trials, rng.seed, threads)
    return [corollary_report(trials, 2)], {"m": 2, "draws": sizes.corollary_trials}


def equivalence_criterion(sizes: Sizes, rng: Rng, threads: int | None) -> tuple[list[Report], dict]:
    quench = run_trials(quench_task, QuenchEnsembleSpec(m=2), sizes.equivalence_trials, rng.substream(0).seed, threads)
    iqp = run_trials(
        sample_probability_task,
        SamplePayload(IqpEnsembleSpec(qubits=2), "random"),
        sizes.equivalence_trials,
        rng.substream(1).seed,
        threads,
    )
    report = two_sample_ks(
        np.array([t.q for t in quench]), np.array([r.p for r in iqp]), tie_tolerance=settings.KS_TIE_TOLERANCE
    )
    exact = [exact_equivalence_report(m) for m in (1, 2)]
    return [report, *exact], {"m": 2, "values": sizes.equivalence_trials, "exact_m": [1, 2]}


def iqp_anticonc_criterion(sizes: Sizes, rng: Rng, threads: int | None) -> tuple[list[Report], dict]:
    reports = []
    for m in (2, 3):
        rows = run_trials(
            sample_probability_task,
            SamplePayload(IqpEnsembleSpec(qubits=m), "zero"),
            sizes.iqp_trials,
            rng.substream(m).seed,
            threads,
        )
        sample = ProbSample(np.array([r.p for r in rows]), 2**m)
        report = fraction_above(sample, 2.0 ** -(m + 1), COROLLARY_BOUND, rule="se", statistic="iqp_anticonc")
        report.parameters["m"] = m
        reports.append(report)
    return reports, {"m": [2, 3], "circuits": sizes.iqp_trials}


def iqp_group_criterion(sizes: Sizes, rng: Rng, threads: int | None) -> tuple[list[Report], dict]:
    m = 4
    worst = 0.0
    exact = True
    for k in range(sizes.group_pairs):
        stream = rng.substream(k)
        a, b = sample_dense_iqp(m, stream), sample_dense_iqp(m, stream)
        _, deviation = equal_up_to_global_phase(
            iqp_unitary_matrix(compose_iqp(a, b)), iqp_unitary_matrix(a) @ iqp_unitary_matrix(b)
        )
        worst = max(worst, deviation)
        exact &= compose_iqp(a, iqp_identity(m)) == a and compose_iqp(a, iqp_inverse(a)) == iqp_identity(m)
    return [
        Report(
            statistic="iqp_composition",
            estimate=worst,
            reference=1e-10,
            verdict=Verdict.PASS if worst <= 1e-10 and exact else Verdict.FAIL,
            count=sizes.group_pairs,
            rule="product deviation <= 1e-10, identity and inverse exact",
            details={"identity_inverse_exact": exact},
        )
    ], {"m": m, "pairs": sizes.group_pairs}


def property_criterion(sizes: Sizes, rng: Rng, threads: int | None) -> tuple[list[Report], dict]:
    n = 5
    gates = rng.substream(0)
    state = zero_state(n)
    worst_roundtrip = 0.0
    for g in range(sizes.norm_gates):
        if g % 2:
            q = int(gates.integers(0, n - 1))
            u, targets = haar_via_qr(4, gates), (q, q + 1)
        else:
            u, targets = haar_via_qr(2, gates), (int(gates.integers(0, n)),)
        before = state
        state = apply_gate(state, u, targets, validate=False)
        if g % 100 == 0:
            back = apply_gate(state, dagger(u), targets, validate=False)
            worst_roundtrip = max(worst_roundtrip, float(np.max(np.abs(back.amplitudes - before.amplitudes))))
    norm_drift = abs(state.norm() ** 2 - 1)

    worst_normalization = 0.0
    specs = [
        BrickworkEnsembleSpec(qubits=4, depth=8),
        BrickworkEnsembleSpec(qubits=4, depth=8, source="bis"),
        IqpEnsembleSpec(qubits=3),
        DiagonalEnsembleSpec(qubits=3),
        QuenchEnsembleSpec(m=1),
    ]
    for k, spec in enumerate(specs):
        dist = output_distribution(spec, rng.substream(1).substream(k))
        worst_normalization = max(worst_normalization, abs(float(dist.sum()) - 1))

    pz_failures = 0
    mixtures = rng.substream(2)
    for trial in range(20):
        weights = mixtures.uniform(size=3)
        choice = mixtures.generator.choice(3, size=2_000, p=weights / weights.sum())
        values = np.where(choice == 0, 0.0, np.where(choice == 1, mixtures.uniform(size=2_000), 1.0))
        values = np.concatenate([values, [0.5]])
        for alpha in (0.1, 0.5, 0.9):
            if not paley_zygmund_check(ProbSample(values, 2), alpha).passed:
                pz_failures += 1

    checks = {
        "norm_drift": (norm_drift, 1e-9),
        "roundtrip": (worst_roundtrip, 1e-11),
        "normalization": (worst_normalization, 1e-10),
        "paley_zygmund_failures": (float(pz_failures), 0.0),
    }
    reports = [
        Report(
            statistic=name,
            estimate=value,
            reference=limit,
            verdict=Verdict.PASS if value <= limit else Verdict.FAIL,
            rule="estimate <= reference",
        )
        for name, (value, limit) in checks.items()
    ]
    return reports, {"gates": sizes.norm_gates, "ensembles": len(specs)}


CRITERIA: list[tuple[str, Callable[[Sizes, Rng, int | None], tuple[list[Report], dict[str, Any]]]]] = [
    ("haar moments", haar_moments_criterion),
    ("porter-thomas law", porter_thomas_criterion),
    ("haar construction equivalence", construction_criterion),
    ("brickwork anticoncentration", brickwork_criterion),
    ("depth monotonicity", monotonicity_criterion),
    ("hamiltonian vs cz", hamiltonian_criterion),
    ("uniform x_L marginal", marginal_criterion),
    ("conditional anticoncentration", corollary_criterion),
    ("quench vs dense iqp", equivalence_criterion),
    ("dense iqp anticoncentration", iqp_anticonc_criterion),
    ("iqp group laws", iqp_group_criterion),
    ("property suites", property_criterion),
]


def run_suite(suite: Suite, threads: int | None = None, only: list[int] | None = None) -> list[CriterionResult]:
    """Run the criteria of ``suite`` (optionally a subset by number) and collect verdicts."""
    sizes = SIZES[suite]
    root = Rng(VERIFY_SEED)
    results = []
    for number, (name, criterion) in enumerate(CRITERIA, start=1):
        if only and number not in only:
            continue
        start = time.perf_counter()
        try:
            reports, used = criterion(sizes, root.substream(number), threads)
            verdict, message = _all_pass(reports), ""
        except AnticoncError as exc:
            logger.exception(f"criterion {number} ({name}) raised")
            reports, used, verdict, message = [], {}, Verdict.FAIL, exc.message
        seconds = time.perf_counter() - start
        logger.info(f"criterion {number:2d} {name}: {verdict.value} ({seconds:.1f}s)")
        results.append(
            CriterionResult(
                criterion=number, name=name, verdict=verdict, seconds=seconds, sizes=used, reports=reports,
                message=message,
            )
        )
    return results


def summary_table(results: list[CriterionResult]) -> str:
    lines = [f"{'#':>2}  {'criterion':<32} {'verdict':<8} {'seconds':>8}"]
    for r in results:
        lines.append(f"{r.criterion:>2}  {r.name:<32} {r.verdict.value:<8} {r.seconds:>8.1f}")
    passed = sum(r.verdict == Verdict.PASS for r in results)
    lines.append(f"{passed}/{len(results)} criteria passed")
    return "\n".join(lines)


def run_verify(
    suite: Suite,
    out_dir: str | None = None,
    threads: int | None = None,
    only: list[int] | None = None,
) -> tuple[list[CriterionResult], ResultRecord]:
    """Run a suite and write ``verify.json``; timings are logged but kept out of the file."""
    if suite not in SUITES:
        raise InputError(f"Unknown suite '{suite}', expected one of {SUITES}")
    results = run_suite(suite, threads, only)
    config = {"suite": suite, "seed": VERIFY_SEED, "criteria": only or list(range(1, len(CRITERIA) + 1))}
    digest = payload_hash(config)
    record = ResultRecord(
        run_id=run_id(f"verify-{suite}", digest),
        tool_version=settings.APP_VERSION,
        config_hash=digest,
        config=config,
        criteria=results,
    )
    write_json(
        os.path.join(output_dir(out_dir), "verify.json"), record, exclude={"criteria": {"__all__": {"seconds"}}}
    )
    return results, record
