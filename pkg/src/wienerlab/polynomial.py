"""Exact integer polynomials in q, plus coefficient-sequence analysis.

Coefficients are plain Python ints, so all arithmetic is exact at any
magnitude; there is no silent-wraparound failure mode.  The analysis half of
the module classifies coefficient sequences: unimodality (with plateaus),
log-concavity, and complete factorization over the negative rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

# json encodes coefficients beyond this bound as decimal strings
_JSON_SAFE_INT = 2**53 - 1


def _trimmed(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Poly:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of q^i.

    Trailing zeros are trimmed on construction, so equal polynomials always
    compare equal.  The zero polynomial has an empty coefficient tuple.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trimmed(self.coeffs))

    # ring operations ------------------------------------------------------

    def __add__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            other = Poly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            other = Poly((other,))
        return self + (-other)

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(tuple(out))

    def __rmul__(self, other: int) -> Poly:
        return self.scale(other)

    def scale(self, c: int) -> Poly:
        return Poly(tuple(c * x for x in self.coeffs))

    def shift(self, k: int) -> Poly:
        """Multiply by q^k (k >= 0)."""
        if k < 0:
            raise ValueError("shift amount must be nonnegative")
        if self.is_zero:
            return self
        return Poly((0,) * k + self.coeffs)

    # queries ---------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial maps to 0 (one-vertex diameter convention)."""
        return len(self.coeffs) - 1 if self.coeffs else 0

    def coeff(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def evaluate(self, x):
        """Horner evaluation; works for int, Fraction, or float arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative_at_one(self) -> int:
        return sum(i * c for i, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}q")
            else:
                parts.append(f"{c}q^{i}")
        return " + ".join(parts).replace("+ -", "- ")


def q_analog(n: int) -> Poly:
    """The q-analog [n] = 1 + q + ... + q^(n-1); [0] is the zero polynomial."""
    if n < 0:
        raise ValueError("q_analog requires n >= 0")
    return Poly((1,) * n)


def poly_to_json(p: Poly) -> dict:
    """Canonical JSON form; coefficients outside the 53-bit safe range become strings."""
    return {
        "coeffs": [c if abs(c) <= _JSON_SAFE_INT else str(c) for c in p.coeffs]
    }


def poly_from_json(obj: dict) -> Poly:
    return Poly(tuple(int(c) for c in obj["coeffs"]))


@dataclass(frozen=True)
class SequenceVerdict:
    """Shape report for one coefficient window.

    ``peak_range`` is the (first, last) absolute index of the maximal
    plateau when the window is unimodal, else None.  ``neg_rational_roots``
    is the root multiset when the window polynomial splits into linear
    factors with negative rational roots, else None.
    """

    unimodal: bool
    peak_range: tuple[int, int] | None
    log_concave: bool
    first_violation: int | None
    neg_rational_roots: tuple[Fraction, ...] | None


def analyze_sequence(p: Poly, start: int = 0, *, factor: bool = True) -> SequenceVerdict:
    """Classify the coefficients of ``p`` from index ``start`` onward.

    Unimodality allows plateaus (non-strict inequalities).  Log-concavity is
    the pointwise test a_m^2 >= a_{m-1} a_{m+1} over the window, so a leading
    zero outside the window cannot fail it.  Factorization, when requested,
    is attempted on the polynomial whose coefficient list is the window.
    """
    window = list(p.coeffs[start:])
    if not window:
        return SequenceVerdict(True, None, True, None, None)

    rising = True
    unimodal = True
    for i in range(1, len(window)):
        if window[i] > window[i - 1]:
            if not rising:
                unimodal = False
                break
        elif window[i] < window[i - 1]:
            rising = False

    peak_range = None
    if unimodal:
        top = max(window)
        lo = window.index(top)
        hi = len(window) - 1 - window[::-1].index(top)
        peak_range = (start + lo, start + hi)

    log_concave = True
    first_violation = None
    for m in range(1, len(window) - 1):
        if window[m] * window[m] < window[m - 1] * window[m + 1]:
            log_concave = False
            first_violation = start + m
            break

    roots = None
    if factor:
        wp = Poly(tuple(window))
        if not wp.is_zero:
            roots = factor_negative_rational_roots(wp)
    return SequenceVerdict(unimodal, peak_range, log_concave, first_violation, roots)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _eval_at(coeffs: list[int], r: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * r + c
    return acc


def _peel_root(coeffs: list[int], r: Fraction) -> list[int] | None:
    """Exact division by (q - r); returns integer quotient coefficients or None."""
    deg = len(coeffs) - 1
    quotient: list[Fraction] = [Fraction(0)] * deg
    quotient[deg - 1] = Fraction(coeffs[deg])
    for i in range(deg - 1, 0, -1):
        quotient[i - 1] = coeffs[i] + r * quotient[i]
    if coeffs[0] + r * quotient[0] != 0:
        return None
    out = []
    for c in quotient:
        if c.denominator != 1:
            return None
        out.append(int(c))
    return out


def factor_negative_rational_roots(p: Poly) -> tuple[Fraction, ...] | None:
    """Root multiset when p = c * prod(q - r_j) with every r_j in Q_{<0}.

    Returns the sorted roots (with multiplicity) if such a complete
    factorization exists, otherwise None.  Candidates come from the rational
    root theorem applied to the original polynomial; divisions are exact.
    """
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    coeffs = list(p.coeffs)
    if len(coeffs) == 1:
        return ()
    # all roots negative forces all coefficients nonzero with one sign
    sign = 1 if coeffs[-1] > 0 else -1
    if any(c == 0 or (c > 0) != (sign > 0) for c in coeffs):
        return None
    # Newton: a real-rooted same-sign polynomial has log-concave coefficients
    if any(coeffs[m] ** 2 < coeffs[m - 1] * coeffs[m + 1] for m in range(1, len(coeffs) - 1)):
        return None

    candidates = sorted(
        {Fraction(-a, b) for a in _divisors(coeffs[0]) for b in _divisors(coeffs[-1])}
    )
    work = coeffs
    roots: list[Fraction] = []
    for r in candidates:
        while len(work) > 1 and _eval_at(work, r) == 0:
            peeled = _peel_root(work, r)
            if peeled is None:
                break
            work = peeled
            roots.append(r)
    if len(work) == 1:
        return tuple(sorted(roots))
    return None
