"""Exact integer polynomials, rational generating functions, and
constant-coefficient linear recurrences, including recurrence guessing.

Conventions.  A polynomial is a tuple of ints indexed by degree with no
trailing zeros; the zero polynomial is the empty tuple.  Sequences are
1-indexed: ``seq[0]`` holds the term a_1.  Recurrence checking treats a_k
as 0 for every k <= 0, so a relation may validly start at an index at or
below its order when the early terms happen to extend by zeros.

All arithmetic except root finding is exact (Python ints and Fractions).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy

__all__ = [
    "InsufficientData",
    "LinearRecurrence",
    "NoDominantRoot",
    "RationalGF",
    "dominant_root",
    "fit_recurrence",
    "gf_add",
    "gf_m2",
    "gf_max_first",
    "gf_mul",
    "gf_to_recurrence",
    "poly_add",
    "poly_eval",
    "poly_gcd",
    "poly_mul",
    "poly_sub",
    "recurrence_terms",
    "series_coeffs",
    "verify_recurrence",
]


class InsufficientData(ValueError):
    """Too few terms to fit and still hold out a verification tail."""


class NoDominantRoot(ArithmeticError):
    """The characteristic polynomial has no unique positive real root of
    maximal modulus."""


# ---------------------------------------------------------------------------
# dense integer polynomials

def _trim(coeffs) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_add(a, b) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def poly_sub(a, b) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n))


def poly_mul(a, b) -> tuple[int, ...]:
    a, b = _trim(a), _trim(b)
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def poly_eval(a, x):
    """Horner evaluation; exact when x is a Fraction or int."""
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _frac_divmod(a: list[Fraction], b: list[Fraction]):
    rem = list(a)
    quot = [Fraction(0)] * max(1, len(rem) - len(b) + 1)
    while len(rem) >= len(b) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(b):
            break
        shift = len(rem) - len(b)
        factor = rem[-1] / b[-1]
        quot[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def _primitive(fracs: list[Fraction]) -> tuple[int, ...]:
    if not fracs:
        return ()
    denom_lcm = 1
    for f in fracs:
        denom_lcm = denom_lcm * f.denominator // gcd(denom_lcm, f.denominator)
    ints = [int(f * denom_lcm) for f in fracs]
    content = 0
    for c in ints:
        content = gcd(content, c)
    ints = [c // content for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def poly_gcd(a, b) -> tuple[int, ...]:
    """Primitive greatest common divisor with positive leading coefficient."""
    fa = [Fraction(c) for c in _trim(a)]
    fb = [Fraction(c) for c in _trim(b)]
    while fb:
        _, rem = _frac_divmod(fa, fb)
        fa, fb = fb, rem
    return _primitive(fa)


def _poly_divexact(a, g) -> tuple[int, ...]:
    quot, rem = _frac_divmod([Fraction(c) for c in a], [Fraction(c) for c in g])
    if rem:
        raise ValueError("not an exact polynomial division")
    if any(f.denominator != 1 for f in quot):
        raise ValueError("quotient is not integral")
    return _trim(int(f) for f in quot)


# ---------------------------------------------------------------------------
# rational generating functions

@dataclass(frozen=True)
class RationalGF:
    """Ratio of integer polynomials, normalized on construction.

    Reduced to lowest terms over the integers (no common polynomial factor,
    no common content) with a positive constant term in the denominator,
    which must be nonzero so the series at x = 0 exists.
    """

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __post_init__(self):
        num, den = _trim(self.numerator), _trim(self.denominator)
        if not den or den[0] == 0:
            raise ValueError("denominator needs a nonzero constant term")
        if not num:
            num, den = (), (1,)
        else:
            g = poly_gcd(num, den)
            if len(g) > 1:
                num, den = _poly_divexact(num, g), _poly_divexact(den, g)
            content = 0
            for c in (*num, *den):
                content = gcd(content, c)
            num = tuple(c // content for c in num)
            den = tuple(c // content for c in den)
        if den[0] < 0:
            num = tuple(-c for c in num)
            den = tuple(-c for c in den)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)


def gf_add(a: RationalGF, b: RationalGF) -> RationalGF:
    num = poly_add(poly_mul(a.numerator, b.denominator), poly_mul(b.numerator, a.denominator))
    return RationalGF(num, poly_mul(a.denominator, b.denominator))


def gf_mul(a: RationalGF, b: RationalGF) -> RationalGF:
    return RationalGF(poly_mul(a.numerator, b.numerator), poly_mul(a.denominator, b.denominator))


def gf_max_first() -> RationalGF:
    """Generating function of the max-first family sizes for jump bound 2:
    x(1 - x + x^2) / ((1 - x)(1 - x - x^3))."""
    return RationalGF(poly_mul((0, 1), (1, -1, 1)), poly_mul((1, -1), (1, -1, 0, -1)))


def gf_m2() -> RationalGF:
    """Generating function of the full class sizes for jump bound 2.

    Assembled as (1 + x^2) * gf_max_first() + x^2 / (1 - x)^2: the
    max-second family mirrors the max-first one two sizes down and the
    max-last family contributes n - 1.
    """
    one_plus_x2 = RationalGF((1, 0, 1), (1,))
    ramp = RationalGF((0, 0, 1), poly_mul((1, -1), (1, -1)))
    return gf_add(gf_mul(one_plus_x2, gf_max_first()), ramp)


def series_coeffs(gf: RationalGF, count: int) -> list[int]:
    """First ``count`` series coefficients a_0 .. a_{count-1} at x = 0.

    Convolution driven by the denominator; exact.  Coefficients that are
    integers come back as ints, anything else as a Fraction.
    """
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    p, q = gf.numerator, gf.denominator
    out: list = []
    for n in range(count):
        acc = Fraction(p[n] if n < len(p) else 0)
        for i in range(1, min(n, len(q) - 1) + 1):
            acc -= q[i] * out[n - i]
        val = acc / q[0]
        out.append(int(val) if val.denominator == 1 else val)
    return out


# ---------------------------------------------------------------------------
# linear recurrences

@dataclass(frozen=True)
class LinearRecurrence:
    """a_n = sum_i coefficients[i-1] * a_{n-i} for every n >= valid_from,
    with a_k read as 0 for k <= 0.

    ``initial_terms`` carries a_1 .. a_{valid_from - 1}, the terms the
    relation does not determine.
    """

    coefficients: tuple[Fraction, ...]
    valid_from: int
    initial_terms: tuple = ()

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if not coeffs:
            raise ValueError("order must be at least 1")
        if coeffs[-1] == 0:
            raise ValueError("leading-order coefficient must be nonzero")
        if self.valid_from < 1:
            raise ValueError(f"valid_from must be >= 1, got {self.valid_from}")
        if len(self.initial_terms) != self.valid_from - 1:
            raise ValueError(
                f"need {self.valid_from - 1} initial terms, got {len(self.initial_terms)}"
            )
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "initial_terms", tuple(self.initial_terms))

    @property
    def order(self) -> int:
        return len(self.coefficients)


def _predicted(rec: LinearRecurrence, seq, n: int):
    # n is a 1-based sequence index; indices at or below 0 contribute 0
    acc = Fraction(0)
    for i, c in enumerate(rec.coefficients, start=1):
        k = n - i
        if k >= 1:
            acc += c * seq[k - 1]
    return acc


def verify_recurrence(seq, rec: LinearRecurrence) -> bool:
    """Exact check of the relation at every index from valid_from to len(seq)."""
    if len(seq) < rec.valid_from + rec.order:
        raise ValueError(
            f"need terms through index {rec.valid_from + rec.order}, got {len(seq)}"
        )
    return all(
        _predicted(rec, seq, n) == seq[n - 1] for n in range(rec.valid_from, len(seq) + 1)
    )


def recurrence_terms(rec: LinearRecurrence, count: int) -> list:
    """Terms a_1 .. a_count generated from the initial terms and the relation."""
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    out = list(rec.initial_terms[:count])
    for n in range(len(out) + 1, count + 1):
        val = _predicted(rec, out, n)
        out.append(int(val) if val.denominator == 1 else val)
    return out


def gf_to_recurrence(gf: RationalGF) -> LinearRecurrence:
    """Recurrence satisfied by the 1-indexed coefficient sequence of ``gf``.

    Coefficients come from the denominator; the relation starts right after
    the last index where the numerator (with its constant term folded out)
    still interferes.
    """
    q = gf.denominator
    if len(q) < 2:
        raise ValueError("denominator must have positive degree to define a recurrence")
    q0 = q[0]
    coeffs = tuple(Fraction(-qi, q0) for qi in q[1:])
    head = Fraction(gf.numerator[0] if gf.numerator else 0, q0)
    shifted = [Fraction(c) - head * qi for c, qi in
               zip(list(gf.numerator) + [0] * len(q), list(q) + [0] * len(gf.numerator))]
    while shifted and shifted[-1] == 0:
        shifted.pop()
    valid_from = max(1, len(shifted))
    initial = tuple(series_coeffs(gf, valid_from)[1:])
    return LinearRecurrence(coeffs, valid_from, initial)


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction], ncols: int):
    """Particular solution of an overdetermined exact linear system, with
    free variables pinned to 0; None when inconsistent."""
    mat = [row + [b] for row, b in zip(rows, rhs)]
    pivot_of: dict[int, int] = {}
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivot_of[c] = r
        r += 1
        if r == len(mat):
            break
    for i in range(r, len(mat)):
        if mat[i][ncols] != 0:
            return None
    return [mat[pivot_of[c]][ncols] if c in pivot_of else Fraction(0) for c in range(ncols)]


def fit_recurrence(seq, max_order: int, max_offset: int) -> LinearRecurrence | None:
    """Guess the lowest-order exact recurrence satisfied by ``seq``.

    Searches by ascending order, then ascending valid_from (at most
    1 + max_offset), solving each candidate exactly over the rationals.
    The last two terms never enter a fit; a candidate only survives if the
    relation then holds on every index through the end of the data,
    held-out tail included.  Returns None when nothing fits.
    """
    if max_order < 1 or max_offset < 0:
        raise ValueError(f"bad search bounds: max_order={max_order}, max_offset={max_offset}")
    L = len(seq)
    if L < 4:
        raise InsufficientData(f"need at least 4 terms, got {L}")
    fit_end = L - 2
    for order in range(1, max_order + 1):
        for valid_from in range(1, max_offset + 2):
            if fit_end - valid_from + 1 < order:
                break  # too few equations for this many unknowns
            rows = []
            rhs = []
            for n in range(valid_from, fit_end + 1):
                rows.append([Fraction(seq[n - i - 1]) if n - i >= 1 else Fraction(0)
                             for i in range(1, order + 1)])
                rhs.append(Fraction(seq[n - 1]))
            sol = _solve_exact(rows, rhs, order)
            if sol is None or sol[-1] == 0:
                continue
            rec = LinearRecurrence(tuple(sol), valid_from, tuple(seq[:valid_from - 1]))
            if verify_recurrence(seq, rec):
                return rec
    return None


# ---------------------------------------------------------------------------
# characteristic roots

def dominant_root(rec, tolerance: float = 1e-12) -> float:
    """Largest positive real root of x^d - c_1 x^(d-1) - ... - c_d.

    Accepts a LinearRecurrence or a bare coefficient sequence.  The root
    must be the unique characteristic root of maximal modulus; otherwise
    NoDominantRoot is raised.  Located via the companion matrix, then
    polished by Newton steps well past ``tolerance``.
    """
    coeffs = [float(c) for c in getattr(rec, "coefficients", rec)]
    if not coeffs:
        raise ValueError("empty coefficient list")
    char = [1.0] + [-c for c in coeffs]
    roots = numpy.roots(char)
    moduli = numpy.abs(roots)
    top = float(moduli.max())
    near = roots[moduli > top * (1.0 - 1e-6)]
    if len(near) != 1:
        raise NoDominantRoot(
            f"{len(near)} characteristic roots share the maximal modulus {top:.6g}"
        )
    candidate = complex(near[0])
    if abs(candidate.imag) > 1e-6 * max(1.0, top) or candidate.real <= 0:
        raise NoDominantRoot(f"maximal-modulus root {candidate:.6g} is not positive real")

    def f(x: float) -> float:
        acc = 0.0
        for c in char:
            acc = acc * x + c
        return acc

    def fprime(x: float) -> float:
        acc = 0.0
        deg = len(char) - 1
        for i, c in enumerate(char[:-1]):
            acc = acc * x + (deg - i) * c
        return acc

    x = candidate.real
    for _ in range(60):
        d = fprime(x)
        if d == 0:
            break
        step = f(x) / d
        x -= step
        if abs(step) < min(tolerance, 1e-14) * max(1.0, abs(x)):
            break
    return x
