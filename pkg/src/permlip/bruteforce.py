"""Brute-force ground truth for the bounded-jump 132-avoiding classes.

Everything here is driven only by the defining predicates (pattern test
plus jump bound).  No structural shortcuts, no closed forms: these
routines stay valid as an independent oracle for the constructions and
counts implemented elsewhere in the package.

Work grows exponentially with n, so searches refuse to run above a
ceiling: default 14, overridable per call or through the environment
variable ``PERMLIP_CEILING``.
"""

from __future__ import annotations

import math
import os

from .core import prefix_extension_ok

__all__ = [
    "CEILING_ENV_VAR",
    "CeilingExceeded",
    "DEFAULT_CEILING",
    "brute_force_ceiling",
    "catalan",
    "catalan_by_convolution",
    "count",
    "m2_class_sizes",
    "max_position_census",
    "members",
]

DEFAULT_CEILING = 14
CEILING_ENV_VAR = "PERMLIP_CEILING"


class CeilingExceeded(Exception):
    """Requested length is above the configured brute-force ceiling."""


def brute_force_ceiling() -> int:
    """Active ceiling: the environment override if set, else the default."""
    raw = os.environ.get(CEILING_ENV_VAR)
    if raw is None:
        return DEFAULT_CEILING
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{CEILING_ENV_VAR} must be an integer, got {raw!r}") from None


def _check_args(n: int, m: int, ceiling: int | None) -> None:
    if n < 1:
        raise ValueError(f"length must be a positive integer, got {n}")
    if m < 1:
        raise ValueError(f"jump bound must be a positive integer, got {m}")
    limit = ceiling if ceiling is not None else brute_force_ceiling()
    if n > limit:
        raise CeilingExceeded(f"n={n} exceeds brute-force ceiling {limit}")


def _candidates(prefix: list[int], n: int, m: int, used: list[bool]):
    # Adjacency restricts candidates to a window around the last entry; that
    # is part of the definition, not a structural shortcut.  Ascending order
    # makes the search lexicographic.
    if not prefix:
        lo, hi = 1, n
    else:
        last = prefix[-1]
        lo, hi = max(1, last - m), min(n, last + m)
    for v in range(lo, hi + 1):
        if not used[v]:
            yield v


def count(n: int, m: int, ceiling: int | None = None) -> int:
    """Number of length-n permutations avoiding 132 with all jumps <= m.

    Exact, by pruned search over prefixes.  Branches by first entry are
    independent, so totals merge by plain addition.
    """
    _check_args(n, m, ceiling)
    used = [False] * (n + 1)
    prefix: list[int] = []

    def walk() -> int:
        if len(prefix) == n:
            return 1
        total = 0
        for v in _candidates(prefix, n, m, used):
            if prefix_extension_ok(prefix, v, m):
                used[v] = True
                prefix.append(v)
                total += walk()
                prefix.pop()
                used[v] = False
        return total

    return walk()


def members(n: int, m: int, ceiling: int | None = None) -> list[tuple[int, ...]]:
    """All class members of length n in lexicographic order."""
    _check_args(n, m, ceiling)
    used = [False] * (n + 1)
    prefix: list[int] = []
    out: list[tuple[int, ...]] = []

    def walk() -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in _candidates(prefix, n, m, used):
            if prefix_extension_ok(prefix, v, m):
                used[v] = True
                prefix.append(v)
                walk()
                prefix.pop()
                used[v] = False

    walk()
    return out


def catalan(n: int) -> int:
    """The n-th Catalan number binom(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError(f"catalan index must be nonnegative, got {n}")
    return math.comb(2 * n, n) // (n + 1)


def catalan_by_convolution(n: int) -> int:
    """Catalan numbers by the convolution recurrence, as an independent route."""
    if n < 0:
        raise ValueError(f"catalan index must be nonnegative, got {n}")
    table = [1]
    for k in range(1, n + 1):
        table.append(sum(table[i] * table[k - 1 - i] for i in range(k)))
    return table[n]


def max_position_census(n: int, m: int, ceiling: int | None = None) -> dict[int, int]:
    """Histogram of the 1-based position of the entry n across the class.

    Only positions that actually occur appear as keys, so the key set is
    the realized support.
    """
    _check_args(n, m, ceiling)
    hist: dict[int, int] = {}
    for word in members(n, m, ceiling):
        pos = word.index(n) + 1
        hist[pos] = hist.get(pos, 0) + 1
    return dict(sorted(hist.items()))


def m2_class_sizes(n: int, ceiling: int | None = None) -> tuple[int, int, int]:
    """Size of the jump-bound-2 class split by where the maximum sits.

    Returns (max at position 1, max at position 2, max at final position),
    measured directly from the enumeration.  Requires n >= 3: below that
    the three positions are not distinct.
    """
    if n < 3:
        raise ValueError(f"classification by maximum position needs n >= 3, got {n}")
    first = second = last = 0
    for word in members(n, 2, ceiling):
        if word[0] == n:
            first += 1
        elif word[1] == n:
            second += 1
        elif word[-1] == n:
            last += 1
    return first, second, last
