"""The brute-force oracle: distance-distribution polynomials from BFS.

Everything here is computed straight from per-source distance histograms,
with no closed forms involved, so the engine can arbitrate every formula in
the rest of the library.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Disconnected, InvalidVertex
from .graph_core import Graph, ordered_distance_histogram
from .polynomial import Poly, poly_to_json


def wiener_polynomial(g: Graph) -> Poly:
    """Coefficient of q^i counts unordered vertex pairs at distance i."""
    counts = ordered_distance_histogram(g)
    counts[0] -= g.n
    return Poly(tuple(c // 2 for c in counts))


def ordered_wiener(g: Graph) -> Poly:
    """Sum of q^d(u,v) over all ordered pairs, including u = v."""
    return Poly(tuple(ordered_distance_histogram(g)))


def relative_wiener(g: Graph, v: int) -> Poly:
    """Distance distribution from the single vertex v (constant term 1)."""
    if not (0 <= v < g.n):
        raise InvalidVertex(f"vertex {v} not in 0..{g.n - 1}")
    counts = []
    seen = bytearray(g.n)
    seen[v] = 1
    frontier = [v]
    reached = 0
    while frontier:
        counts.append(len(frontier))
        reached += len(frontier)
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = 1
                    nxt.append(w)
        frontier = nxt
    if reached != g.n:
        missing = seen.index(0)
        raise Disconnected(f"no path between vertices {v} and {missing}", witness=(v, missing))
    return Poly(tuple(counts))


def wiener_index(g: Graph) -> int:
    """Sum of distances over unordered pairs; the derivative of the polynomial at 1."""
    return wiener_polynomial(g).derivative_at_one()


@dataclass(frozen=True)
class PropertyChecks:
    """The five elementary facts every connected graph must satisfy."""

    degree_equals_diameter: bool
    constant_term_zero: bool
    linear_term_counts_edges: bool
    value_at_one_counts_pairs: bool
    derivative_is_distance_sum: bool

    @property
    def all_pass(self) -> bool:
        return (
            self.degree_equals_diameter
            and self.constant_term_zero
            and self.linear_term_counts_edges
            and self.value_at_one_counts_pairs
            and self.derivative_is_distance_sum
        )

    def as_dict(self) -> dict[str, bool]:
        return {
            "degree_equals_diameter": self.degree_equals_diameter,
            "constant_term_zero": self.constant_term_zero,
            "linear_term_counts_edges": self.linear_term_counts_edges,
            "value_at_one_counts_pairs": self.value_at_one_counts_pairs,
            "derivative_is_distance_sum": self.derivative_is_distance_sum,
        }


def verify_basic_properties(g: Graph) -> PropertyChecks:
    """Check the five elementary identities directly against BFS histograms."""
    counts = ordered_distance_histogram(g)
    n = g.n
    diam = len(counts) - 1
    halved = list(counts)
    halved[0] -= n
    poly = Poly(tuple(c // 2 for c in halved))
    distance_sum = sum(i * c for i, c in enumerate(counts)) // 2
    return PropertyChecks(
        degree_equals_diameter=poly.degree == diam,
        constant_term_zero=poly.coeff(0) == 0,
        linear_term_counts_edges=poly.coeff(1) == g.m,
        value_at_one_counts_pairs=poly.evaluate(1) == n * (n - 1) // 2,
        derivative_is_distance_sum=poly.derivative_at_one() == distance_sum,
    )


@dataclass(frozen=True)
class WienerReport:
    n: int
    m: int
    diameter: int
    wiener_poly: Poly
    ordered_poly: Poly
    wiener_index: int
    checks: PropertyChecks


def wiener_report(g: Graph) -> WienerReport:
    """One-pass report: polynomials, index, diameter, and property checks."""
    counts = ordered_distance_histogram(g)
    n = g.n
    diam = len(counts) - 1
    ordered = Poly(tuple(counts))
    halved = list(counts)
    halved[0] -= n
    poly = Poly(tuple(c // 2 for c in halved))
    index = poly.derivative_at_one()
    distance_sum = sum(i * c for i, c in enumerate(counts)) // 2
    checks = PropertyChecks(
        degree_equals_diameter=poly.degree == diam,
        constant_term_zero=poly.coeff(0) == 0,
        linear_term_counts_edges=poly.coeff(1) == g.m,
        value_at_one_counts_pairs=poly.evaluate(1) == n * (n - 1) // 2,
        derivative_is_distance_sum=index == distance_sum,
    )
    return WienerReport(n, g.m, diam, poly, ordered, index, checks)


def report_to_json(report: WienerReport) -> dict:
    return {
        "n": report.n,
        "m": report.m,
        "diameter": report.diameter,
        "coeffs": poly_to_json(report.wiener_poly)["coeffs"],
        "ordered_coeffs": poly_to_json(report.ordered_poly)["coeffs"],
        "index": report.wiener_index,
        "property_checks": report.checks.as_dict(),
    }
