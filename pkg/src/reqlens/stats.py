"""Welch's two-sample t-test with an in-repo t-distribution CDF.

The two-sided p-value is computed through the regularized incomplete beta
function: p = I_{df/(df+t^2)}(df/2, 1/2), evaluated by a Lentz-style
continued fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import InsufficientSample

_BETA_EPS = 1e-15
_BETA_MAX_ITER = 500


@dataclass(frozen=True)
class TTestResult:
    t_statistic: float
    degrees_of_freedom: float
    p_value: float
    significant: bool
    alpha: float


def regularized_incomplete_beta(x: float, a: float, b: float) -> float:
    """I_x(a, b) for a, b > 0 and x in [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1]")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    # use the symmetry relation where the continued fraction converges fastest
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_cf(x, a, b) / a
    return 1.0 - front * _beta_cf(1.0 - x, b, a) / b


def _beta_cf(x: float, a: float, b: float) -> float:
    """Continued fraction for the incomplete beta (modified Lentz)."""
    tiny = 1e-300
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, _BETA_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETA_EPS:
            return h
    return h


def student_t_two_sided_p(t: float, df: float) -> float:
    """P(|T| >= |t|) for T ~ Student's t with df degrees of freedom."""
    if df <= 0:
        raise ValueError("degrees of freedom must be positive")
    if math.isinf(t):
        return 0.0
    x = df / (df + t * t)
    return regularized_incomplete_beta(x, df / 2.0, 0.5)


def _mean_var(sample: Sequence[float]) -> tuple[float, float, int]:
    n = len(sample)
    mean = sum(sample) / n
    var = sum((v - mean) ** 2 for v in sample) / (n - 1)
    return mean, var, n


def welch_t_test(
    sample_a: Sequence[float],
    sample_b: Sequence[float],
    alpha: float = 0.05,
) -> TTestResult:
    """Two-sided Welch's unequal-variance t-test.

    Degenerate conventions (both variances zero): equal means give t = 0,
    p = 1; different means count as significant with p = 0.
    """
    if len(sample_a) < 2 or len(sample_b) < 2:
        raise InsufficientSample("each sample needs at least 2 values")
    mean_a, var_a, n_a = _mean_var(sample_a)
    mean_b, var_b, n_b = _mean_var(sample_b)
    if not all(math.isfinite(v) for v in (mean_a, var_a, mean_b, var_b)):
        raise InsufficientSample("samples must have finite mean and variance")
    se2 = var_a / n_a + var_b / n_b
    if se2 == 0.0:
        if mean_a == mean_b:
            return TTestResult(0.0, float(n_a + n_b - 2), 1.0, False, alpha)
        t = math.inf if mean_a > mean_b else -math.inf
        return TTestResult(t, float(n_a + n_b - 2), 0.0, True, alpha)
    t = (mean_a - mean_b) / math.sqrt(se2)
    df_denom = (var_a / n_a) ** 2 / (n_a - 1) + (var_b / n_b) ** 2 / (n_b - 1)
    # df_denom can underflow to 0 for near-constant samples; fall back to the
    # pooled degrees of freedom in that case
    df = se2 * se2 / df_denom if df_denom > 0 else float(n_a + n_b - 2)
    p = student_t_two_sided_p(t, df)
    return TTestResult(t, df, p, p < alpha, alpha)
