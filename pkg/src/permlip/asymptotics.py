"""Growth analysis for the jump-bound-2 class.

The class generating function has a simple pole inside the unit disk at
the unique positive root of 1 - x - x^3; the counts therefore grow like
amplitude * alpha^n with alpha the reciprocal root.  This module computes
the constants to full float precision and measures how fast the exact
counts close in on the leading term.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from .m2 import class_count_by_recurrence

__all__ = [
    "AsymptoticEstimate",
    "ConvergenceRow",
    "amplitude",
    "asymptotic_value",
    "convergence_csv",
    "convergence_report",
    "dominant_singularity",
    "estimate",
    "log_asymptotic_value",
]

CSV_HEADER = "n,exact,asymptotic,rel_error"

_LOG_FLOAT_MAX = math.log(sys.float_info.max)


def _poly(x: float) -> float:
    return 1.0 - x - x**3


def dominant_singularity(tolerance: float = 1e-12) -> float:
    """The unique positive root of 1 - x - x^3, in (0, 1).

    Bisection brackets the root, Newton steps finish it off; the residual
    is forced below ``tolerance`` (which must be positive and < 1e-6).
    """
    if not 0 < tolerance < 1e-6:
        raise ValueError(f"tolerance must lie in (0, 1e-6), got {tolerance}")
    lo, hi = 0.0, 1.0
    for _ in range(40):
        mid = 0.5 * (lo + hi)
        if _poly(mid) > 0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    for _ in range(20):
        step = _poly(x) / (-1.0 - 3.0 * x * x)
        x -= step
        if abs(step) < 1e-16:
            break
    if abs(_poly(x)) > tolerance:
        raise ArithmeticError(f"root refinement stalled at residual {_poly(x):.3g}")
    return x


def amplitude(rho: float) -> float:
    """Leading-term amplitude (2 rho - 1) / ((1 - rho)^2 (1 + 3 rho^2))."""
    return (2.0 * rho - 1.0) / ((1.0 - rho) ** 2 * (1.0 + 3.0 * rho * rho))


@dataclass(frozen=True)
class AsymptoticEstimate:
    """The growth constants, cross-validated on construction."""

    rho: float
    alpha: float
    amplitude: float
    tolerance: float

    def __post_init__(self):
        if abs(_poly(self.rho)) > self.tolerance:
            raise ValueError(f"rho={self.rho!r} is not a root of 1 - x - x^3")
        if abs(self.alpha * self.rho - 1.0) > self.tolerance:
            raise ValueError("alpha must be the reciprocal of rho")
        if abs(self.alpha**3 - self.alpha**2 - 1.0) > 10.0 * self.tolerance:
            raise ValueError("alpha must satisfy alpha^3 = alpha^2 + 1")


def estimate(tolerance: float = 1e-12) -> AsymptoticEstimate:
    rho = dominant_singularity(tolerance)
    return AsymptoticEstimate(rho, 1.0 / rho, amplitude(rho), tolerance)


def asymptotic_value(n: int, est: AsymptoticEstimate) -> float:
    """Leading term amplitude * alpha^n as a float.

    Overflows binary64 for n around 1860; use ``log_asymptotic_value``
    past that.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if log_asymptotic_value(n, est) >= _LOG_FLOAT_MAX:
        raise OverflowError(
            f"leading term at n={n} exceeds float range; use log_asymptotic_value"
        )
    return est.amplitude * est.alpha**n


def log_asymptotic_value(n: int, est: AsymptoticEstimate) -> float:
    """Natural log of the leading term; safe for any n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return math.log(est.amplitude) + n * math.log(est.alpha)


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    exact: int
    asymptotic_log: float
    rel_error: float

    def asymptotic_display(self) -> str:
        """Scientific notation derived from the log, so huge n still prints."""
        log10 = self.asymptotic_log / math.log(10.0)
        exponent = math.floor(log10)
        mantissa = 10.0 ** (log10 - exponent)
        return f"{mantissa:.9f}e{exponent:+03d}"


def convergence_report(n_max: int, est: AsymptoticEstimate | None = None) -> list[ConvergenceRow]:
    """Exact count vs leading term for n = 1 .. n_max (n_max <= 10**4).

    Relative error is computed in log space, so the comparison stays
    finite even when both sides dwarf the float range.
    """
    if not 1 <= n_max <= 10**4:
        raise ValueError(f"n_max must lie in 1..10000, got {n_max}")
    est = est or estimate()
    rows = []
    for n in range(1, n_max + 1):
        exact = class_count_by_recurrence(n)
        asym_log = log_asymptotic_value(n, est)
        rel = abs(math.expm1(asym_log - math.log(exact)))
        rows.append(ConvergenceRow(n, exact, asym_log, rel))
    return rows


def convergence_csv(n_max: int, est: AsymptoticEstimate | None = None) -> str:
    lines = [CSV_HEADER]
    for row in convergence_report(n_max, est):
        lines.append(f"{row.n},{row.exact},{row.asymptotic_display()},{row.rel_error:.6e}")
    return "\n".join(lines) + "\n"
