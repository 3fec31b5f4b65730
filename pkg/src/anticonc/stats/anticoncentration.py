"""Anticoncentration fractions, the 2-design lower bound and the Paley-Zygmund check."""

import numpy as np
from scipy import stats

from ..core.config import settings
from ..core.exceptions import InputError
from ..schemas.report import Report, Verdict
from .moments import empirical_moments
from .sample import ProbSample


def design_anticonc_bound(alpha: float, epsilon: float) -> float:
    """(1 - alpha)^2 (1 - epsilon)^2 / (2 (1 + epsilon)).

    Lower bound on Pr(p > alpha (1 - epsilon) / N) for a relative epsilon-approximate 2-design.
    """
    if not 0 <= alpha <= 1:
        raise InputError(f"alpha must lie in [0, 1], got {alpha}")
    if not 0 <= epsilon < 1:
        raise InputError(f"epsilon must lie in [0, 1), got {epsilon}")
    return (1 - alpha) ** 2 * (1 - epsilon) ** 2 / (2 * (1 + epsilon))


def wilson_interval(successes: int, count: int, confidence: float | None = None) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    confidence = settings.WILSON_CONFIDENCE if confidence is None else confidence
    if count < 1:
        raise InputError("Wilson interval needs at least one trial")
    if not 0 <= successes <= count:
        raise InputError(f"successes must lie in [0, {count}], got {successes}")
    z = float(stats.norm.ppf(0.5 + confidence / 2))
    phat = successes / count
    denominator = 1 + z * z / count
    center = (phat + z * z / (2 * count)) / denominator
    half = z * np.sqrt(phat * (1 - phat) / count + z * z / (4 * count * count)) / denominator
    return max(0.0, center - half), min(1.0, center + half)


def fraction_above(
    s: ProbSample,
    threshold: float,
    bound: float,
    strict: bool = False,
    rule: str = "wilson",
    statistic: str = "fraction_above",
    slack: float | None = None,
) -> Report:
    """Fraction of values at or above ``threshold`` (strictly above if ``strict``).

    ``rule="wilson"`` passes when the lower Wilson limit reaches ``bound``; ``rule="se"``
    passes when ``fraction + slack * SE`` reaches it.
    """
    slack = settings.SE_SLACK if slack is None else slack
    hits = s.values > threshold if strict else s.values >= threshold
    successes = int(np.count_nonzero(hits))
    fraction = successes / s.count
    se = float(np.sqrt(fraction * (1 - fraction) / s.count))
    low, high = wilson_interval(successes, s.count)

    if rule == "wilson":
        passed = low >= bound
        rule_text = f"wilson_{settings.WILSON_CONFIDENCE:g}_low >= bound"
    elif rule == "se":
        passed = fraction + slack * se >= bound
        rule_text = f"fraction + {slack}*SE >= bound"
    else:
        raise InputError(f"Unknown verdict rule '{rule}'")

    return Report(
        statistic=statistic,
        estimate=fraction,
        standard_error=se,
        ci_low=low,
        ci_high=high,
        reference=bound,
        verdict=Verdict.PASS if passed else Verdict.FAIL,
        count=s.count,
        rule=rule_text,
        parameters={"threshold": threshold, "strict": strict, "N": s.N},
    )


def anticonc_fraction(s: ProbSample, alpha: float, epsilon: float) -> Report:
    """Fraction of p > alpha (1 - epsilon) / N against :func:`design_anticonc_bound`."""
    bound = design_anticonc_bound(alpha, epsilon)
    report = fraction_above(
        s, alpha * (1 - epsilon) / s.N, bound, strict=True, rule="wilson", statistic="anticonc_fraction"
    )
    report.parameters.update({"alpha": alpha, "epsilon": epsilon})
    return report


def paley_zygmund_check(s: ProbSample, alpha: float, slack: float | None = None) -> Report:
    """Empirical Pr(p > alpha E[p]) against (1 - alpha)^2 E[p]^2 / E[p^2]."""
    if not 0 <= alpha <= 1:
        raise InputError(f"alpha must lie in [0, 1], got {alpha}")
    slack = settings.SE_SLACK if slack is None else slack
    moments = empirical_moments(s)
    if moments.second_moment <= 0:
        raise InputError("Paley-Zygmund check needs a positive second moment")

    fraction = float(np.mean(s.values > alpha * moments.mean))
    se = float(np.sqrt(fraction * (1 - fraction) / s.count))
    rhs = (1 - alpha) ** 2 * moments.mean**2 / moments.second_moment
    return Report(
        statistic="paley_zygmund",
        estimate=fraction,
        standard_error=se,
        reference=rhs,
        verdict=Verdict.PASS if fraction + slack * se >= rhs - 1e-12 else Verdict.FAIL,
        count=s.count,
        rule=f"fraction + {slack}*SE >= (1-alpha)^2 E[p]^2/E[p^2]",
        parameters={"alpha": alpha},
    )
