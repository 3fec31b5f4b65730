"""
2-design diagnostics based on the overlap moment E[p^2].

The deviation ``delta2 = E[p^2] N (N + 1) / 2 - 1`` vanishes for exact state 2-designs.
"""

from collections.abc import Callable, Sequence

import numpy as np

from ..core.config import settings
from ..core.exceptions import InputError, InsufficientSamplesError
from ..core.logger import logging
from ..core.rng import Rng
from ..schemas.report import Report, ScanRow, ScanSummary, Verdict
from .moments import empirical_moments
from .sample import ProbSample

logger = logging.getLogger(__name__)

MIN_DESIGN_TRIALS = 100


def _delta2_verdict(delta2: float, se: float, tol: float, slack: float) -> Verdict:
    return Verdict.PASS if abs(delta2) <= max(tol, slack * se) else Verdict.FAIL


def delta2_report(s: ProbSample, tol: float | None = None, slack: float | None = None) -> Report:
    tol = settings.DESIGN_TOLERANCE if tol is None else tol
    slack = settings.SE_SLACK if slack is None else slack
    moments = empirical_moments(s)
    scale = s.N * (s.N + 1) / 2
    delta2 = moments.second_moment * scale - 1
    se = moments.se_second * scale
    return Report(
        statistic="delta2",
        estimate=delta2,
        standard_error=se,
        reference=0.0,
        verdict=_delta2_verdict(delta2, se, tol, slack),
        count=s.count,
        rule=f"|delta2| <= max({tol}, {slack}*SE)",
        parameters={"N": s.N},
        details={"mean": moments.mean, "second_moment": moments.second_moment},
    )


def state_2design_diagnostic(
    sampler: Callable[[Rng], float],
    N: int,
    trials: int,
    rng: Rng,
    tol: float | None = None,
) -> Report:
    """Estimate delta2 for ``p = sampler(rng_i)`` over ``trials`` independent substreams.

    ``sampler`` returns the probability of the reference outcome for one ensemble draw.
    """
    if trials < MIN_DESIGN_TRIALS:
        raise InsufficientSamplesError(f"2-design diagnostic needs at least {MIN_DESIGN_TRIALS} trials")
    values = np.array([sampler(rng.substream(t)) for t in range(trials)])
    return delta2_report(ProbSample(values, N), tol)


def collision_second_moment(distributions: np.ndarray) -> tuple[float, float]:
    """E[p^2] from full output distributions, one row per circuit.

    Each circuit contributes ``sum_x p_x^2 / N``, an unbiased estimate of E[p_x^2] for
    ensembles invariant under relabelling of outcomes.
    """
    distributions = np.atleast_2d(np.asarray(distributions, dtype=float))
    trials, N = distributions.shape
    if trials < 2:
        raise InsufficientSamplesError("Collision estimate needs at least 2 distributions")
    per_circuit = np.sum(distributions * distributions, axis=1) / N
    return float(per_circuit.mean()), float(per_circuit.std(ddof=1) / np.sqrt(trials))


def scan_row(
    depth: int,
    distributions: np.ndarray,
    outcomes: np.ndarray,
    alpha: float = 0.5,
    tol: float | None = None,
    slack: float | None = None,
) -> ScanRow:
    """One scan row: collision delta2 and the fraction of p(x_t) >= alpha/N at outcomes x_t."""
    tol = settings.DESIGN_TOLERANCE if tol is None else tol
    slack = settings.SE_SLACK if slack is None else slack
    distributions = np.atleast_2d(distributions)
    N = distributions.shape[1]
    second, se_second = collision_second_moment(distributions)
    scale = N * (N + 1) / 2
    delta2 = second * scale - 1
    se = se_second * scale

    p = distributions[np.arange(distributions.shape[0]), np.asarray(outcomes, dtype=int)]
    frac = float(np.mean(p >= alpha / N))
    frac_se = float(np.sqrt(frac * (1 - frac) / p.size))
    return ScanRow(depth=depth, delta2=delta2, se=se, frac=frac, frac_se=frac_se,
                   verdict=_delta2_verdict(delta2, se, tol, slack))


def summarize_scan(rows: list[ScanRow], tol: float | None = None, slack: float | None = None) -> ScanSummary:
    """Non-increasing delta2 within ``slack`` combined SE, and the first converged depth."""
    tol = settings.DESIGN_TOLERANCE if tol is None else tol
    slack = settings.SE_SLACK if slack is None else slack
    monotone = all(
        b.delta2 <= a.delta2 + slack * float(np.hypot(a.se, b.se)) for a, b in zip(rows, rows[1:])
    )
    strictly = all(b.delta2 < a.delta2 for a, b in zip(rows, rows[1:]))
    first = next((r.depth for r in rows if abs(r.delta2) <= tol), None)
    return ScanSummary(
        rows=rows,
        monotone=monotone,
        first_converged_depth=first,
        tolerance=tol,
        slack=slack,
        strictly_decreasing=strictly,
    )


def design_convergence_scan(
    distribution_sampler: Callable[[int, Rng], np.ndarray],
    depths: Sequence[int],
    trials: int,
    rng: Rng,
    alpha: float = 0.5,
) -> ScanSummary:
    """delta2 and anticoncentration fraction per depth.

    ``distribution_sampler(depth, rng)`` returns the full output distribution of one random
    circuit. Each trial reads the fraction at a uniformly random outcome.
    """
    depths = list(depths)
    if depths != sorted(depths):
        raise InputError(f"Depths must be sorted ascending, got {depths}")
    rows = []
    for k, depth in enumerate(depths):
        row_rng = rng.substream(k)
        distributions = []
        outcomes = []
        for t in range(trials):
            trial_rng = row_rng.substream(t)
            dist = distribution_sampler(depth, trial_rng.substream(0))
            distributions.append(dist)
            outcomes.append(int(trial_rng.substream(1).integers(0, dist.size)))
        row = scan_row(depth, np.array(distributions), np.array(outcomes), alpha)
        logger.info(f"scan depth={depth}: delta2={row.delta2:.4f} (se {row.se:.4f}), frac={row.frac:.3f}")
        rows.append(row)
    return summarize_scan(rows)
