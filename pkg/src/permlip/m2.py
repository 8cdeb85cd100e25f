"""Closed-form constructions and counts for the jump-bound-2 class.

For n >= 3 the class splits three ways by the position of the maximum
entry: first, second, or last.  Each family has a rigid shape, built
directly here with no search:

* max-last members are an increasing tail fed by a short descending
  prefix (one family per position of the entry 1);
* max-second members are exactly the max-first members of length n - 2
  with the two largest values grafted on the front;
* max-first members satisfy the size recurrence
  count(n) = count(n - 1) + count(n - 3) + 1.

Counting is linear time via memoized tables, so sizes are cheap for n in
the thousands.
"""

from __future__ import annotations

import threading

from .core import in_class

__all__ = [
    "class_count",
    "class_count_by_recurrence",
    "even_descent_perm",
    "max_first_count",
    "max_first_perms",
    "max_last_count",
    "max_last_perms",
    "max_second_count",
    "odd_descent_perm",
    "to_max_first",
    "to_max_second",
    "zigzag",
]

_TABLE_LOCK = threading.Lock()

# index n; slot 0 unused
_MAX_FIRST = [0, 1, 1, 2]
_CLASS_REC = [0, 1, 2, 5, 8, 12, 18]


def odd_descent_perm(n: int, p: int) -> tuple[int, ...]:
    """Max-last member with descending odd prefix 2p-1, 2p-3, ..., 3, 1.

    The rest of 1..n-1 follows in increasing order, then n.  Valid for
    1 <= p <= n // 2; p = 1 gives the identity.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if not 1 <= p <= n // 2:
        raise ValueError(f"prefix index p={p} outside 1..{n // 2} for n={n}")
    prefix = list(range(2 * p - 1, 0, -2))
    rest = sorted(set(range(1, n)) - set(prefix))
    return tuple(prefix + rest + [n])


def even_descent_perm(n: int, p: int) -> tuple[int, ...]:
    """Max-last member with prefix 2p, 2p-2, ..., 2, 1 (even run, then 1).

    The rest of 1..n-1 follows in increasing order, then n.  Valid for
    1 <= p <= (n - 1) // 2.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if not 1 <= p <= (n - 1) // 2:
        raise ValueError(f"prefix index p={p} outside 1..{(n - 1) // 2} for n={n}")
    prefix = list(range(2 * p, 0, -2)) + [1]
    rest = sorted(set(range(1, n)) - set(prefix))
    return tuple(prefix + rest + [n])


def max_last_perms(n: int) -> list[tuple[int, ...]]:
    """All max-last members of length n: odd-prefix family then even-prefix
    family, each by ascending prefix length."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    odd = [odd_descent_perm(n, p) for p in range(1, n // 2 + 1)]
    even = [even_descent_perm(n, p) for p in range(1, (n - 1) // 2 + 1)]
    return odd + even


def max_last_count(n: int) -> int:
    """Number of max-last members: n - 1."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return n - 1


def max_first_count(n: int) -> int:
    """Number of max-first members, by the memoized size recurrence."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n >= len(_MAX_FIRST):
        with _TABLE_LOCK:
            while len(_MAX_FIRST) <= n:
                k = len(_MAX_FIRST)
                _MAX_FIRST.append(_MAX_FIRST[k - 1] + _MAX_FIRST[k - 3] + 1)
    return _MAX_FIRST[n]


def max_second_count(n: int) -> int:
    """Number of max-second members: the max-first count two sizes down."""
    if n < 3:
        raise ValueError(f"max-second members need n >= 3, got {n}")
    return max_first_count(n - 2)


def class_count(n: int) -> int:
    """Total class size for jump bound 2, assembled from the three families."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        return 1
    if n == 2:
        return 2
    return max_first_count(n) + max_first_count(n - 2) + (n - 1)


def class_count_by_recurrence(n: int) -> int:
    """Total class size via the order-5 constant-coefficient recurrence.

    Independent of :func:`class_count`; the two must agree everywhere.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n >= len(_CLASS_REC):
        with _TABLE_LOCK:
            while len(_CLASS_REC) <= n:
                a = _CLASS_REC
                k = len(a)
                a.append(3 * a[k - 1] - 3 * a[k - 2] + 2 * a[k - 3] - 2 * a[k - 4] + a[k - 5])
    return _CLASS_REC[n]


def zigzag(n: int) -> tuple[int, ...]:
    """Descend from n by twos, then ascend through the skipped values.

    (n, n-2, ..., 2, 1, 3, ..., n-1) for even n and
    (n, n-2, ..., 1, 2, 4, ..., n-1) for odd n.  This is the single
    max-first member whose second entry is n - 2 but which does not reduce
    to a shorter max-first member.  Needs n >= 4.
    """
    if n < 4:
        raise ValueError(f"zigzag needs n >= 4, got {n}")
    descent = list(range(n, 0, -2))
    if n % 2 == 0:
        return tuple(descent + [1] + list(range(3, n, 2)))
    return tuple(descent + list(range(2, n, 2)))


def max_first_perms(n: int) -> list[tuple[int, ...]]:
    """All max-first members of length n.

    Built recursively: prepend n to every member one size down, graft
    (n, n-2, n-1) onto every member three sizes down, and close with the
    zigzag.  The three blocks are disjoint (second and third entries
    differ) and appear in that order.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        return [(1,)]
    if n == 2:
        return [(2, 1)]
    if n == 3:
        return [(3, 2, 1), (3, 1, 2)]
    out = [(n,) + w for w in max_first_perms(n - 1)]
    out += [(n, n - 2, n - 1) + w for w in max_first_perms(n - 3)]
    out.append(zigzag(n))
    return out


def to_max_first(word) -> tuple[int, ...]:
    """Send a max-second member to a max-first member two sizes down.

    Drops the first two entries (forced to be n - 1 then n).  Requires the
    input to be a class member of length >= 3 with its maximum second.
    """
    n = len(word)
    if n < 3:
        raise ValueError(f"need length >= 3, got {n}")
    if word[1] != n:
        raise ValueError(f"maximum must sit at position 2, got word {word!r}")
    if not in_class(word, 2):
        raise ValueError(f"not a class member for jump bound 2: {word!r}")
    return tuple(word[2:])


def to_max_second(word, n: int) -> tuple[int, ...]:
    """Inverse graft: prepend n - 1 and n to a max-first member of length n - 2."""
    if len(word) != n - 2 or n < 3:
        raise ValueError(f"need a word of length n - 2 = {n - 2}, got {len(word)}")
    if word[0] != n - 2:
        raise ValueError(f"first entry must be {n - 2}, got {word[0]}")
    return (n - 1, n) + tuple(word)
