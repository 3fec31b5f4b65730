"""
Kolmogorov-Smirnov and chi-square tests with fixed asymptotic critical values.

The KS statistics come from :mod:`scipy.stats`; verdicts compare them with ``c / sqrt(n)``
(one sample) or ``c * sqrt((n + m) / (n m))`` (two samples), ``c = KS_CRITICAL_VALUE``.
"""

import numpy as np
from scipy import stats

from ..core.config import settings
from ..core.exceptions import InputError
from ..core.logger import logging
from ..core.rng import Rng
from ..numerics.random_matrix import porter_thomas_cdf, sample_porter_thomas
from ..schemas.report import Report, Verdict
from .sample import ProbSample

logger = logging.getLogger(__name__)

CALIBRATION_MAX_REJECTION = 0.03


def ks_critical_value(significance: float) -> float:
    """Asymptotic Kolmogorov constant c(alpha) = sqrt(-ln(alpha / 2) / 2); 1.628 at alpha = 0.01."""
    if not 0.0 < significance < 1.0:
        raise InputError(f"Significance must lie in (0, 1), got {significance}")
    return float(np.sqrt(-0.5 * np.log(significance / 2.0)))


def ks_porter_thomas(s: ProbSample) -> Report:
    """One-sample KS of the values against the CDF 1 - (1 - p)^(N - 1)."""
    if s.N < 2:
        raise InputError(f"Porter-Thomas law needs N >= 2, got {s.N}")
    result = stats.kstest(s.values, lambda p: porter_thomas_cdf(p, s.N))
    critical = settings.KS_CRITICAL_VALUE / np.sqrt(s.count)
    return Report(
        statistic="ks_porter_thomas",
        estimate=float(result.statistic),
        reference=float(critical),
        verdict=Verdict.PASS if result.statistic <= critical else Verdict.FAIL,
        count=s.count,
        rule=f"D <= {settings.KS_CRITICAL_VALUE}/sqrt(n)",
        parameters={"N": s.N},
        details={"pvalue": float(result.pvalue)},
    )


def merge_ties(x: np.ndarray, y: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray]:
    """Snap values of the pooled sample that lie within ``tol`` of their predecessor onto one atom."""
    pooled = np.concatenate([x, y])
    order = np.argsort(pooled, kind="stable")
    ordered = pooled[order]
    starts = np.concatenate([[True], np.diff(ordered) > tol])
    snapped = np.empty_like(pooled)
    snapped[order] = ordered[starts][np.cumsum(starts) - 1]
    return snapped[: x.size], snapped[x.size :]


def two_sample_ks(
    a: ProbSample | np.ndarray, b: ProbSample | np.ndarray, tie_tolerance: float | None = None
) -> Report:
    """Two-sample KS; pass means the equal-distribution hypothesis is not rejected.

    With ``tie_tolerance`` values closer than the tolerance count as one atom, so a discrete law
    is not split by floating-point noise.
    """
    x = a.values if isinstance(a, ProbSample) else np.asarray(a, dtype=float)
    y = b.values if isinstance(b, ProbSample) else np.asarray(b, dtype=float)
    if x.size == 0 or y.size == 0:
        raise InputError("Two-sample KS needs two non-empty samples")
    if tie_tolerance is not None:
        x, y = merge_ties(x, y, tie_tolerance)
    result = stats.ks_2samp(x, y)
    n, m = x.size, y.size
    critical = settings.KS_CRITICAL_VALUE * np.sqrt((n + m) / (n * m))
    return Report(
        statistic="two_sample_ks",
        estimate=float(result.statistic),
        reference=float(critical),
        verdict=Verdict.PASS if result.statistic <= critical else Verdict.FAIL,
        count=int(n + m),
        rule=f"D <= {settings.KS_CRITICAL_VALUE}*sqrt((n+m)/(nm))",
        parameters={"n": int(n), "m": int(m), "tie_tolerance": tie_tolerance},
        details={"pvalue": float(result.pvalue)},
    )


def chi_square_uniformity(counts: np.ndarray | list[int], significance: float | None = None) -> Report:
    """Pearson chi-square of category counts against the uniform law."""
    significance = settings.SIGNIFICANCE if significance is None else significance
    counts = np.asarray(counts, dtype=float)
    if counts.size < 2 or counts.sum() <= 0:
        raise InputError("Chi-square uniformity needs at least two categories and a positive total")
    result = stats.chisquare(counts)
    return Report(
        statistic="chi_square_uniformity",
        estimate=float(result.statistic),
        reference=significance,
        verdict=Verdict.PASS if result.pvalue >= significance else Verdict.FAIL,
        count=int(counts.sum()),
        rule="pvalue >= significance",
        parameters={"categories": int(counts.size)},
        details={"pvalue": float(result.pvalue)},
    )


def ks_calibration(N: int, count: int, repetitions: int, rng: Rng) -> Report:
    """Rejection rate of :func:`ks_porter_thomas` on synthetic data drawn from its own null."""
    rejections = 0
    for r in range(repetitions):
        values = sample_porter_thomas(N, count, rng.substream(r))
        if not ks_porter_thomas(ProbSample(values, N)).passed:
            rejections += 1
    rate = rejections / repetitions
    logger.debug(f"KS calibration N={N}: {rejections}/{repetitions} rejections")
    return Report(
        statistic="ks_calibration",
        estimate=rate,
        reference=CALIBRATION_MAX_REJECTION,
        verdict=Verdict.PASS if rate <= CALIBRATION_MAX_REJECTION else Verdict.FAIL,
        count=repetitions,
        rule=f"rejection rate <= {CALIBRATION_MAX_REJECTION}",
        parameters={"N": N, "count": count},
    )
