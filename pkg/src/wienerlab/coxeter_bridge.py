"""Reflection-length generating polynomials of finite Coxeter groups.

The polynomial of a group is the product of (1 + e*q) over its exponents e,
taken here from the standard tables.  For the symmetric groups the module
also materializes the reflection graph (vertices are permutations, edges are
right multiplications by transpositions), where graph distance from the
identity equals reflection length; that gives an independent brute-force
census to check the tables and the ordered-polynomial identity
W-bar(G) = |group| * Pi(q).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial

from .errors import InvalidRank, RankTooLarge
from .graph_core import Graph, build_graph
from .polynomial import Poly
from .wiener_engine import ordered_wiener, relative_wiener

_FIXED_EXPONENTS = {
    ("F", 4): (1, 5, 7, 11),
    ("H", 3): (1, 5, 9),
    ("H", 4): (1, 11, 19, 29),
    ("E", 6): (1, 4, 5, 7, 8, 11),
    ("E", 7): (1, 5, 7, 9, 11, 13, 17),
    ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
}


@dataclass(frozen=True)
class CoxeterSpec:
    """A finite Coxeter group named by family letter and rank.

    For I2 the rank field carries the dihedral parameter m (the group of
    order 2m), so I2 with parameter 3 coincides with A2.
    """

    family: str
    rank: int


def exponents(spec: CoxeterSpec) -> tuple[int, ...]:
    fam, r = spec.family, spec.rank
    if fam == "A":
        if r < 1:
            raise InvalidRank(f"A requires rank >= 1, got {r}")
        return tuple(range(1, r + 1))
    if fam == "B":
        if r < 2:
            raise InvalidRank(f"B requires rank >= 2, got {r}")
        return tuple(range(1, 2 * r, 2))
    if fam == "D":
        if r < 4:
            raise InvalidRank(f"D requires rank >= 4, got {r}")
        return tuple(range(1, 2 * r - 2, 2)) + (r - 1,)
    if fam == "I2":
        if r < 3:
            raise InvalidRank(f"I2 requires parameter >= 3, got {r}")
        return (1, r - 1)
    if (fam, r) in _FIXED_EXPONENTS:
        return _FIXED_EXPONENTS[(fam, r)]
    raise InvalidRank(f"no Coxeter group {fam}{r} in the tables")


def all_table_specs(i2_max: int = 10) -> list[CoxeterSpec]:
    """Every spec the exponent tables cover, at bounded rank."""
    specs = [CoxeterSpec("A", r) for r in range(1, 9)]
    specs += [CoxeterSpec("B", r) for r in range(2, 9)]
    specs += [CoxeterSpec("D", r) for r in range(4, 9)]
    specs += [CoxeterSpec("I2", m) for m in range(3, i2_max + 1)]
    specs += [CoxeterSpec(f, r) for (f, r) in _FIXED_EXPONENTS]
    return specs


def poincare_poly(spec: CoxeterSpec) -> Poly:
    """Product of (1 + e*q) over the exponents of the group."""
    out = Poly((1,))
    for e in exponents(spec):
        out = out * Poly((1, e))
    return out


def symmetric_group_elements(n: int) -> list[tuple[int, ...]]:
    """All permutations of 0..n-1 in lexicographic one-line order."""
    return list(permutations(range(n)))


def reflection_length(perm: tuple[int, ...]) -> int:
    """Minimum number of transpositions multiplying to ``perm``: n - #cycles."""
    n = len(perm)
    seen = bytearray(n)
    cycles = 0
    for i in range(n):
        if seen[i]:
            continue
        cycles += 1
        j = i
        while not seen[j]:
            seen[j] = 1
            j = perm[j]
    return n - cycles


def reflection_length_census(n: int) -> list[int]:
    """Counts of permutations of 0..n-1 by reflection length."""
    counts = [0] * n
    for perm in permutations(range(n)):
        counts[reflection_length(perm)] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


def reflection_graph(n: int) -> Graph:
    """Graph on the n! permutations, adjacent when they differ by a transposition.

    Vertex indices follow lexicographic one-line order, so the identity is
    vertex 0.  Capped at n = 6 (720 vertices).
    """
    if n < 2:
        raise InvalidRank(f"reflection graph needs n >= 2, got {n}")
    if n > 6:
        raise RankTooLarge(f"reflection graph is capped at n = 6, got {n}")
    elements = symmetric_group_elements(n)
    index = {perm: i for i, perm in enumerate(elements)}
    edges = []
    for i, perm in enumerate(elements):
        base = list(perm)
        for a, b in combinations(range(n), 2):
            base[a], base[b] = base[b], base[a]
            j = index[tuple(base)]
            base[a], base[b] = base[b], base[a]
            if i < j:
                edges.append((i, j))
    return build_graph(factorial(n), edges)


def verify_wgw(n: int) -> bool:
    """Check W-bar(reflection graph) = n! * Pi(q), and the single-vertex route.

    The reflection graph is vertex transitive, so the distribution seen from
    the identity alone must equal the reflection-length polynomial.
    """
    g = reflection_graph(n)
    pi = poincare_poly(CoxeterSpec("A", n - 1))
    if ordered_wiener(g) != factorial(n) * pi:
        return False
    return relative_wiener(g, 0) == pi
