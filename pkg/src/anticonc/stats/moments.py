from typing import NamedTuple

import numpy as np

from ..core.config import settings
from ..core.exceptions import InsufficientSamplesError
from ..numerics.random_matrix import haar_moments
from ..schemas.report import Report, Verdict
from .sample import ProbSample


class Moments(NamedTuple):
    mean: float
    second_moment: float
    se_mean: float
    se_second: float


def empirical_moments(s: ProbSample) -> Moments:
    """Sample mean of p and p^2 with plug-in standard errors."""
    if s.count < 2:
        raise InsufficientSamplesError(f"Moments need at least 2 values, got {s.count}")
    p = s.values
    p2 = p * p
    root = np.sqrt(s.count)
    return Moments(
        mean=float(p.mean()),
        second_moment=float(p2.mean()),
        se_mean=float(p.std(ddof=1) / root),
        se_second=float(p2.std(ddof=1) / root),
    )


def within_slack(estimate: float, reference: float, se: float, slack: float | None = None) -> bool:
    slack = settings.SE_SLACK if slack is None else slack
    # exact agreement passes even when the standard error vanishes
    return abs(estimate - reference) <= slack * se + 1e-15


def moments_report(s: ProbSample, slack: float | None = None) -> Report:
    """Empirical E[p], E[p^2] against the Haar values 1/N and 2/(N(N+1))."""
    slack = settings.SE_SLACK if slack is None else slack
    moments = empirical_moments(s)
    first, second = haar_moments(s.N)
    mean_ok = within_slack(moments.mean, first, moments.se_mean, slack)
    second_ok = within_slack(moments.second_moment, second, moments.se_second, slack)
    return Report(
        statistic="moments",
        estimate=moments.mean,
        standard_error=moments.se_mean,
        reference=first,
        verdict=Verdict.PASS if mean_ok and second_ok else Verdict.FAIL,
        count=s.count,
        rule=f"|mean - 1/N| <= {slack}*SE and |E[p^2] - 2/(N(N+1))| <= {slack}*SE",
        parameters={"N": s.N, "slack": slack},
        details={
            "second_moment": moments.second_moment,
            "se_second": moments.se_second,
            "reference_second": second,
            "mean_ok": mean_ok,
            "second_ok": second_ok,
        },
    )
