"""Binary graph operations and their two-term distance-polynomial formulas.

Product vertices (u1, u2) map to index u1 * n2 + u2, so formula-vs-oracle
comparisons are stable.  The tensor product has no formula route here; it is
served by the BFS oracle only.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb

from .errors import TrivialFactor, UnsupportedOp
from .families import path
from .families import closed_form_poly as _family_poly
from .graph_core import Graph, build_graph
from .polynomial import Poly


class GraphOp(Enum):
    JOIN = "join"
    CARTESIAN = "cartesian"
    COMPOSITION = "composition"
    DISJUNCTION = "disjunction"
    SYMMETRIC_DIFFERENCE = "symdiff"
    TENSOR = "tensor"


@dataclass(frozen=True)
class OpStats:
    """Vertex, edge, and non-edge counts of the two operands."""

    n1: int
    n2: int
    k1: int
    k2: int
    kbar1: int
    kbar2: int

    @classmethod
    def from_graphs(cls, g1: Graph, g2: Graph) -> OpStats:
        return cls(
            n1=g1.n,
            n2=g2.n,
            k1=g1.m,
            k2=g2.m,
            kbar1=comb(g1.n, 2) - g1.m,
            kbar2=comb(g2.n, 2) - g2.m,
        )


def apply_op(op: GraphOp, g1: Graph, g2: Graph) -> Graph:
    """Build the operation graph edge-by-edge from the defining condition."""
    if op is GraphOp.JOIN:
        n1, n2 = g1.n, g2.n
        edges = list(g1.edges())
        edges += [(n1 + u, n1 + v) for u, v in g2.edges()]
        edges += [(u, n1 + v) for u in range(n1) for v in range(n2)]
        return build_graph(n1 + n2, edges)

    n1, n2 = g1.n, g2.n
    a1 = [set(nb) for nb in g1.adj]
    a2 = [set(nb) for nb in g2.adj]
    total = n1 * n2
    edges = []
    for u in range(total):
        u1, u2 = divmod(u, n2)
        for v in range(u + 1, total):
            v1, v2 = divmod(v, n2)
            e1 = v1 in a1[u1]
            e2 = v2 in a2[u2]
            if op is GraphOp.CARTESIAN:
                keep = (e1 and u2 == v2) or (e2 and u1 == v1)
            elif op is GraphOp.COMPOSITION:
                keep = e1 or (u1 == v1 and e2)
            elif op is GraphOp.DISJUNCTION:
                keep = e1 or e2
            elif op is GraphOp.SYMMETRIC_DIFFERENCE:
                keep = e1 != e2
            elif op is GraphOp.TENSOR:
                keep = e1 and e2
            else:
                raise UnsupportedOp(f"unknown operation {op}")
            if keep:
                edges.append((u, v))
    return build_graph(total, edges)


def closed_form_op_poly(
    op: GraphOp, stats: OpStats, w1: Poly | None = None, w2: Poly | None = None
) -> Poly:
    """Formula route for the operation polynomial.

    Join, composition, disjunction, and symmetric difference return the
    unordered polynomial; the cartesian product returns the ordered one
    (the product of the two ordered factors).  Composition needs ``w1``;
    cartesian needs both factor polynomials.  Factors must have at least
    two vertices, and the guarantees assume connected factors.
    """
    if op is GraphOp.TENSOR:
        raise UnsupportedOp("no closed form for the tensor product; use the oracle")
    if stats.n1 < 2 or stats.n2 < 2:
        raise TrivialFactor("operation formulas need both factors nontrivial (n >= 2)")
    n1, n2, k1, k2 = stats.n1, stats.n2, stats.k1, stats.k2
    kb1, kb2 = stats.kbar1, stats.kbar2

    if op is GraphOp.JOIN:
        return Poly((0, k1 + k2 + n1 * n2, kb1 + kb2))
    if op is GraphOp.COMPOSITION:
        if w1 is None:
            raise ValueError("composition formula needs the first factor polynomial")
        return Poly((0, n1 * k2, n1 * kb2)) + (n2 * n2) * w1
    if op is GraphOp.DISJUNCTION:
        return Poly(
            (
                0,
                n1 * n1 * k2 + n2 * n2 * k1 - 2 * k1 * k2,
                n1 * kb2 + n2 * kb1 + 2 * kb1 * kb2,
            )
        )
    if op is GraphOp.SYMMETRIC_DIFFERENCE:
        return Poly(
            (
                0,
                n1 * k2 + n2 * k1 + 2 * k1 * kb2 + 2 * k2 * kb1,
                n1 * kb2 + n2 * kb1 + 2 * k1 * k2 + 2 * kb1 * kb2,
            )
        )
    if op is GraphOp.CARTESIAN:
        if w1 is None or w2 is None:
            raise ValueError("cartesian formula needs both factor polynomials")
        ordered1 = 2 * w1 + n1
        ordered2 = 2 * w2 + n2
        return ordered1 * ordered2
    raise UnsupportedOp(f"unknown operation {op}")


def ordered_path_poly(n: int) -> Poly:
    """Ordered distance polynomial of the n-vertex path."""
    return 2 * _family_poly(path(n)) + n


def grid_ordered_poly(m: int, n: int) -> Poly:
    """Ordered distance polynomial of the m x n grid, as a product of paths.

    The cartesian identity makes this the product of the two ordered path
    polynomials; no rational division is needed.
    """
    return ordered_path_poly(m) * ordered_path_poly(n)
