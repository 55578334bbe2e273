"""Greedily grown d-ary trees (dendrimers).

A dendrimer on n nodes grows by attaching each new leaf to the smallest
numbered node whose degree is still at most d, so the root ends up with d+1
children and every other internal node with d.  The module provides the
construction, the base-d digit labels that locate a node within its level,
the per-node difference polynomial, a closed form for the whole distance
distribution that needs no graph at all, the distance sum of a complete
dendrimer, a generating function across complete levels, and the peak-shape
classification of the coefficient sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InvalidParameter, NonExactDivision, ProfileMismatch
from .graph_core import Graph, build_graph
from .polynomial import Poly, analyze_sequence


def _check_arity(d: int) -> None:
    if d < 2:
        raise InvalidParameter(f"arity must be at least 2, got {d}")


def _geom(d: int, k: int) -> int:
    """1 + d + ... + d^(k-1), i.e. (d^k - 1) / (d - 1)."""
    return (d**k - 1) // (d - 1)


@dataclass(frozen=True)
class Thresholds:
    """Node counts at which level k transitions happen.

    n_k: first node at level k+1; m_k: first node below the second child of
    the root at level k+1; p_k: where the coefficient peak switches regime;
    n_next: n_{k+1}.  Always n_k < m_k < p_k < n_next for d >= 2.
    """

    d: int
    k: int
    n_k: int
    m_k: int
    p_k: int
    n_next: int


def thresholds(d: int, k: int) -> Thresholds:
    _check_arity(d)
    if k < 0:
        raise InvalidParameter(f"level must be nonnegative, got {k}")
    n_k = 2 + (d + 1) * _geom(d, k)
    m_k = 3 + 2 * d * _geom(d, k)
    p_k = m_k + 2 * d**k - 1
    n_next = 2 + (d + 1) * _geom(d, k + 1)
    return Thresholds(d, k, n_k, m_k, p_k, n_next)


def level_of(m: int, d: int) -> int:
    """The level index k with n_k <= m < n_{k+1}; defined for m >= 2."""
    _check_arity(d)
    if m < 2:
        raise InvalidParameter(f"levels are defined for nodes >= 2, got {m}")
    k = 0
    while m >= 2 + (d + 1) * _geom(d, k + 1):
        k += 1
    return k


@dataclass(frozen=True)
class DendrimerLabel:
    """Base-d digit vector (l_{k+1}, ..., l_0) locating node ``vertex``."""

    vertex: int
    d: int
    k: int
    digits: tuple[int, ...]

    def digit(self, i: int) -> int:
        """l_i, the digit with place value d^i."""
        return self.digits[len(self.digits) - 1 - i]

    def digit_prefix(self, i: int) -> int:
        """l_0 + l_1 d + ... + l_{i-1} d^(i-1); zero when i = 0."""
        return sum(self.digit(j) * self.d**j for j in range(i))


def label(m: int, d: int) -> DendrimerLabel:
    """Digits of m - n_k + (d-1) d^k in base d, padded to k+2 places."""
    _check_arity(d)
    if m < 2:
        raise InvalidParameter(f"labels are defined for nodes >= 2, got {m}")
    k = level_of(m, d)
    n_k = 2 + (d + 1) * _geom(d, k)
    value = m - n_k + (d - 1) * d**k
    digits = []
    v = value
    for _ in range(k + 2):
        digits.append(v % d)
        v //= d
    if v:
        raise AssertionError(f"label value {value} does not fit in {k + 2} base-{d} digits")
    return DendrimerLabel(m, d, k, tuple(reversed(digits)))


def build_dendrimer(n: int, d: int) -> Graph:
    """Grow the tree node by node; node i is vertex i-1 in the Graph."""
    _check_arity(d)
    if n < 1:
        raise InvalidParameter(f"need at least one node, got {n}")
    deg = [0] * n
    edges = []
    parent_scan = 0
    for child in range(1, n):
        while deg[parent_scan] > d:
            parent_scan += 1
        edges.append((parent_scan, child))
        deg[parent_scan] += 1
        deg[child] += 1
    return build_graph(n, edges)


def _upper_index(n: int, d: int, k: int) -> int:
    """k' bound for the even-exponent sums: k-1 below m_k, else k."""
    m_k = 3 + 2 * d * _geom(d, k)
    return k - 1 if n < m_k else k


def delta_wiener(n: int, d: int) -> Poly:
    """Distance distribution from node n to the earlier nodes.

    Equals the difference between the closed forms at n and n-1; its
    coefficients sum to n - 1.
    """
    lab = label(n, d)
    k = lab.k
    kp = _upper_index(n, d, k)
    coeffs = [0] * (2 * k + 3)
    for i in range(k + 1):
        coeffs[2 * i + 1] += d**i
    for i in range(kp + 1):
        coeffs[2 * i + 2] += d**i * (lab.digit(i) + 1)
    return Poly(tuple(coeffs))


def closed_form(n: int, d: int) -> Poly:
    """Exact distance distribution of the n-node dendrimer.

    Runs in O(log^2 n) digit operations; no graph is built.
    """
    _check_arity(d)
    if n < 1:
        raise InvalidParameter(f"need at least one node, got {n}")
    if n == 1:
        return Poly()
    lab = label(n, d)
    k = lab.k
    kp = _upper_index(n, d, k)
    coeffs = [0] * (2 * k + 3)
    for i in range(k + 1):
        n_i = 2 + (d + 1) * _geom(d, i)
        coeffs[2 * i + 1] = d**i * (n - n_i + 1)
    for i in range(kp + 1):
        m_i = 3 + 2 * d * _geom(d, i)
        li = lab.digit(i)
        lam = lab.digit_prefix(i)
        whole_periods = (n - m_i) // d ** (i + 1)
        if whole_periods < 0:
            raise AssertionError(f"negative period count at n={n}, d={d}, i={i}")
        coeffs[2 * i + 2] = (
            d ** (2 * i) * whole_periods * comb(d + 1, 2)
            + d ** (2 * i) * comb(li + 1, 2)
            + d**i * (li + 1) * (lam + 1)
        )
    return Poly(tuple(coeffs))


def complete_wiener_index(k: int, d: int) -> int:
    """Distance sum of the complete dendrimer (n = n_k - 1 nodes)."""
    _check_arity(d)
    if k < 1:
        raise InvalidParameter(f"complete dendrimers need level >= 1, got {k}")
    numerator = (
        d ** (2 * k) * (k * d**3 + (k - 2) * d**2 - (k + 3) * d - (k + 1))
        + 2 * d**k * (d + 1) ** 2
        - (d + 1)
    )
    denominator = (d - 1) ** 3
    if numerator % denominator:
        raise NonExactDivision(
            f"complete-dendrimer index not divisible at k={k}, d={d}: {numerator}/{denominator}"
        )
    return numerator // denominator


def gf_expand(d: int, levels: int) -> list[Poly]:
    """Series coefficients of the complete-dendrimer generating function.

    Entry k is the distance polynomial of the complete dendrimer at level k;
    entry 0 is zero.  Expansion inverts the cubic denominator
    (1 - z)(1 - d z)(1 - d^2 q^2 z) by the matching linear recurrence.
    """
    _check_arity(d)
    if levels < 1:
        raise InvalidParameter(f"need at least one level, got {levels}")
    pairs = comb(d + 1, 2)
    numer1 = Poly((0, d + 1, pairs))
    numer2 = Poly((0, 0, pairs))
    rec1 = Poly((1 + d, 0, d * d))
    rec2 = Poly((d, 0, (1 + d) * d * d))
    rec3 = Poly((0, 0, d**3))
    series = [Poly()]
    for k in range(1, levels + 1):
        term = Poly()
        if k == 1:
            term = numer1
        elif k == 2:
            term = numer2
        term = term + rec1 * series[k - 1]
        if k >= 2:
            term = term - rec2 * series[k - 2]
        if k >= 3:
            term = term + rec3 * series[k - 3]
        series.append(term)
    return series


@dataclass(frozen=True)
class UnimodalityProfile:
    """Where the coefficient peak of the n-node dendrimer sits.

    ``peak_class`` is "mid" when n < p_k (maximum at exponent 2k or 2k+1)
    and "increasing" when p_k <= n < n_{k+1} (coefficients rise all the way
    to exponent 2k+2).
    """

    n: int
    d: int
    k: int
    n_k: int
    m_k: int
    p_k: int
    n_next: int
    peak_class: str
    peak_range: tuple[int, int]


def unimodality_profile(n: int, d: int) -> UnimodalityProfile:
    """Classify n by threshold and confirm the classification on the closed form.

    Raises ProfileMismatch when the computed coefficients contradict the
    predicted shape; that always signals a bug.
    """
    _check_arity(d)
    if n < 2:
        raise InvalidParameter(f"profile needs at least two nodes, got {n}")
    k = level_of(n, d)
    th = thresholds(d, k)
    poly = closed_form(n, d)
    verdict = analyze_sequence(poly, start=1, factor=False)
    if not verdict.unimodal or verdict.peak_range is None:
        raise ProfileMismatch(f"coefficients of n={n}, d={d} are not unimodal")
    lo, hi = verdict.peak_range
    if n >= th.p_k:
        if poly.degree != 2 * k + 2 or hi != 2 * k + 2:
            raise ProfileMismatch(
                f"n={n}, d={d}: expected increasing run to exponent {2 * k + 2}, "
                f"got peak plateau {lo}..{hi} with degree {poly.degree}"
            )
        peak_class = "increasing"
    else:
        if hi < 2 * k or lo > 2 * k + 1:
            raise ProfileMismatch(
                f"n={n}, d={d}: expected a maximum at exponent {2 * k} or {2 * k + 1}, "
                f"got peak plateau {lo}..{hi}"
            )
        peak_class = "mid"
    return UnimodalityProfile(
        n=n,
        d=d,
        k=k,
        n_k=th.n_k,
        m_k=th.m_k,
        p_k=th.p_k,
        n_next=th.n_next,
        peak_class=peak_class,
        peak_range=(lo, hi),
    )
