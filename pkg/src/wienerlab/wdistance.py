"""Width-w container distances on small graphs, by exact search.

A container between u and v is a set of internally vertex-disjoint u-v
paths; its width is the number of paths and its length the longest path.
The w-distance is the least container length over all width-w containers.
Finding it is a min-max disjoint-path problem, so this module does an exact
iterative-deepening search with an explicit instance cap (n <= 14) instead
of pretending a heuristic is the real thing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    Disconnected,
    InfeasiblePair,
    InvalidVertex,
    InvalidWidth,
    TooLarge,
)
from .graph_core import UNREACHABLE, Graph, bfs_distances, is_connected
from .polynomial import Poly

_MAX_VERTICES = 14


def max_disjoint_paths(g: Graph, u: int, v: int) -> int:
    """Largest number of internally vertex-disjoint u-v paths (unit-capacity flow)."""
    n = g.n
    # split every internal vertex x into 2x (in) and 2x+1 (out), capacity 1
    cap: dict[tuple[int, int], int] = {}
    neighbors: dict[int, list[int]] = {}

    def add(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            cap[(a, b)] = 0
            cap.setdefault((b, a), 0)
            neighbors.setdefault(a, []).append(b)
            neighbors.setdefault(b, []).append(a)
        cap[(a, b)] += c

    for x in range(n):
        if x != u and x != v:
            add(2 * x, 2 * x + 1, 1)
    for a, b in g.edges():
        add(2 * a + 1, 2 * b, 1)
        add(2 * b + 1, 2 * a, 1)
    source, sink = 2 * u + 1, 2 * v
    flow = 0
    while True:
        parent: dict[int, int | None] = {source: None}
        queue = [source]
        for a in queue:
            for b in neighbors.get(a, ()):
                if b not in parent and cap.get((a, b), 0) > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def _packable(g: Graph, u: int, v: int, width: int, bound: int) -> bool:
    """Can ``width`` internally disjoint u-v paths, each of <= ``bound`` edges, coexist?

    Paths are placed in increasing order of their first internal vertex (a
    direct u-v edge, having none, goes first), which kills permutation
    symmetry in the backtracking.
    """
    adj = g.adj
    adjset = [set(nb) for nb in g.adj]

    def place(remaining: int, used: int, min_first: int) -> bool:
        if remaining == 0:
            return True
        if min_first < 0:
            if v in adjset[u] and place(remaining - 1, used, 0):
                return True
            min_first = 0
        if bound < 2:
            return False
        for c in adj[u]:
            if c == v or c < min_first or used >> c & 1:
                continue
            if walk(c, used | (1 << c), 1, c, remaining):
                return True
        return False

    def walk(cur: int, used: int, length: int, first: int, remaining: int) -> bool:
        for nxt in adj[cur]:
            if nxt == v:
                if length + 1 <= bound and place(remaining - 1, used, first + 1):
                    return True
            elif nxt != u and not (used >> nxt & 1) and length + 2 <= bound:
                if walk(nxt, used | (1 << nxt), length + 1, first, remaining):
                    return True
        return False

    return place(width, 0, -1)


def _checked(g: Graph, w: int) -> None:
    if g.n > _MAX_VERTICES:
        raise TooLarge(f"exact container search is capped at {_MAX_VERTICES} vertices, got {g.n}")
    if not isinstance(w, int) or w < 1:
        raise InvalidWidth(f"width must be a positive integer, got {w!r}")
    if not is_connected(g):
        raise Disconnected("container distances need a connected graph")


def _w_distance_core(g: Graph, u: int, v: int, w: int) -> int | None:
    d = bfs_distances(g, u)[v]
    if d == UNREACHABLE:
        raise Disconnected(f"no path between vertices {u} and {v}", witness=(u, v))
    if w == 1:
        return d
    if max_disjoint_paths(g, u, v) < w:
        return None
    for bound in range(max(d, 2), g.n):
        if _packable(g, u, v, w, bound):
            return bound
    raise AssertionError("a feasible container must appear at length <= n - 1")


def w_distance(g: Graph, u: int, v: int, w: int) -> int | None:
    """Least container length of width w between u and v; None when no
    width-w container exists (vertex connectivity below w)."""
    _checked(g, w)
    if not (0 <= u < g.n) or not (0 <= v < g.n):
        raise InvalidVertex(f"pair ({u}, {v}) leaves vertex range 0..{g.n - 1}")
    if u == v:
        raise InvalidVertex("container endpoints must be distinct")
    return _w_distance_core(g, u, v, w)


@dataclass(frozen=True)
class WDistanceReport:
    w: int
    poly: Poly
    infeasible_pairs: tuple[tuple[int, int], ...]

    @property
    def feasible_pairs(self) -> int:
        return self.poly.evaluate(1)


def w_wiener_poly(g: Graph, w: int, partial: bool = False) -> WDistanceReport:
    """Sum of q^(w-distance) over unordered vertex pairs.

    Pairs with no width-w container raise InfeasiblePair unless ``partial``
    is set, in which case they are excluded and listed in the report.
    """
    _checked(g, w)
    counts = [0] * g.n
    infeasible: list[tuple[int, int]] = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            dw = _w_distance_core(g, u, v, w)
            if dw is None:
                if not partial:
                    raise InfeasiblePair(
                        f"no width-{w} container between vertices {u} and {v}"
                    )
                infeasible.append((u, v))
            else:
                counts[dw] += 1
    return WDistanceReport(w=w, poly=Poly(tuple(counts)), infeasible_pairs=tuple(infeasible))
