"""Empirical growth profiling across jump bounds.

For jump bounds beyond 2 no exact theory ships here; instead this module
gathers brute-force counts, tries to guess a constant-coefficient linear
recurrence from them, and extracts a growth-rate estimate.  Two working
hypotheses guide what gets measured but are never hard-asserted: each
bound may admit such a recurrence, and the growth rates may climb
strictly from 1 toward the Catalan limit 4.  The only claim checked as a
hard fact is that counts never drop when the bound loosens.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bruteforce import count
from .genfunc import LinearRecurrence, NoDominantRoot, dominant_root, fit_recurrence

__all__ = [
    "GrowthProfile",
    "MonotonicityReport",
    "build_profile",
    "monotonicity_check",
    "profile_to_dict",
    "report_to_dict",
]

FIT_MAX_ORDER = 12
FIT_MAX_OFFSET = 12

METHOD_FITTED = "fitted-root"
METHOD_RATIO = "ratio-extrapolation"


@dataclass(frozen=True)
class GrowthProfile:
    """Everything measured about one jump bound.

    ``alpha_estimate`` comes from the fitted recurrence's dominant root
    when a recurrence was found and has one (method "fitted-root"), else
    from the last term ratio, a low-confidence fallback (method
    "ratio-extrapolation").
    """

    m: int
    n_max: int
    terms: tuple[int, ...]
    fitted: LinearRecurrence | None
    alpha_estimate: float | None
    estimate_method: str | None


def build_profile(m: int, n_max: int, ceiling: int | None = None) -> GrowthProfile:
    """Measure counts for lengths 1..n_max at bound m and guess the growth.

    ``n_max`` must sit within the brute-force ceiling.  Reasonable desk
    defaults: 14 up to bound 3, 12 up to bound 5.
    """
    terms = tuple(count(n, m, ceiling) for n in range(1, n_max + 1))
    fitted = None
    if len(terms) >= 4:
        fitted = fit_recurrence(list(terms), FIT_MAX_ORDER, FIT_MAX_OFFSET)
    alpha = None
    method = None
    if fitted is not None:
        try:
            alpha = dominant_root(fitted)
            method = METHOD_FITTED
        except NoDominantRoot:
            pass
    if alpha is None and n_max >= 2:
        alpha = terms[-1] / terms[-2]
        method = METHOD_RATIO
    return GrowthProfile(m, n_max, terms, fitted, alpha, method)


def _coeff_json(c: Fraction):
    return int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def profile_to_dict(profile: GrowthProfile) -> dict:
    """JSON-ready view; counts as decimal strings so nothing is rounded."""
    fitted = None
    if profile.fitted is not None:
        fitted = {
            "order": profile.fitted.order,
            "coefficients": [_coeff_json(c) for c in profile.fitted.coefficients],
            "valid_from": profile.fitted.valid_from,
        }
    return {
        "m": profile.m,
        "n_max": profile.n_max,
        "terms": [str(t) for t in profile.terms],
        "fitted": fitted,
        "alpha_estimate": profile.alpha_estimate,
        "method": profile.estimate_method,
    }


@dataclass(frozen=True)
class MonotonicityReport:
    """Termwise count comparison (hard fact) plus growth-rate observations
    (reported, never asserted)."""

    m_values: tuple[int, ...]
    n_max: int
    termwise_ok: bool
    termwise_failures: tuple[tuple[int, int, int, int, int], ...]
    alphas: tuple[float | None, ...]
    alphas_strictly_increasing: bool | None
    alphas_below_catalan_limit: bool | None


def monotonicity_check(profiles: list[GrowthProfile]) -> MonotonicityReport:
    """Compare profiles with strictly increasing bounds and a shared n_max.

    Counts must never drop termwise as the bound loosens; any violation is
    recorded.  Growth-rate ordering and the ceiling of 4 are conjecture
    territory and only reported.
    """
    if not profiles:
        raise ValueError("need at least one profile")
    n_max = profiles[0].n_max
    ms = [p.m for p in profiles]
    if any(p.n_max != n_max for p in profiles):
        raise ValueError("profiles must share n_max")
    if any(b <= a for a, b in zip(ms, ms[1:])):
        raise ValueError(f"bounds must be strictly increasing, got {ms}")
    failures = []
    for lo, hi in zip(profiles, profiles[1:]):
        for n in range(1, n_max + 1):
            if lo.terms[n - 1] > hi.terms[n - 1]:
                failures.append((lo.m, hi.m, n, lo.terms[n - 1], hi.terms[n - 1]))
    alphas = tuple(p.alpha_estimate for p in profiles)
    increasing = None
    below = None
    if all(a is not None for a in alphas):
        increasing = all(b > a for a, b in zip(alphas, alphas[1:]))
        below = all(a < 4.0 for a in alphas)
    return MonotonicityReport(
        tuple(ms), n_max, not failures, tuple(failures), alphas, increasing, below
    )


def report_to_dict(report: MonotonicityReport) -> dict:
    return {
        "m_values": list(report.m_values),
        "n_max": report.n_max,
        "termwise_ok": report.termwise_ok,
        "termwise_failures": [list(f) for f in report.termwise_failures],
        "alphas": list(report.alphas),
        "alphas_strictly_increasing": report.alphas_strictly_increasing,
        "alphas_below_catalan_limit": report.alphas_below_catalan_limit,
    }
