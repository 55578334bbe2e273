"""Immutable simple undirected graphs, BFS distances, and edge-list I/O.

Distance queries come in two shapes: ``all_pairs_distances`` materializes the
full n x n table (O(n^2) memory, pure Python, the reference implementation),
while ``ordered_distance_histogram`` streams per-source distance counts and
never stores a matrix, switching to a compiled sparse-graph BFS backend for
larger inputs.  The two paths are cross-checked against each other in the
test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from .errors import Disconnected, FormatError, InvalidEdge, InvalidParameter, InvalidVertex

UNREACHABLE = -1

# below this size, per-source Python BFS beats CSR construction overhead
_COMPILED_MIN_N = 48
# histogram block size in matrix cells; bounds working memory to ~16 MB
_CHUNK_CELLS = 2_000_000


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted adjacency lists."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop-count table; ``UNREACHABLE`` marks pairs with no connecting path."""

    n: int
    dist: tuple[tuple[int, ...], ...]

    def distance(self, u: int, v: int) -> int:
        return self.dist[u][v]


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Canonical graph from an edge list; duplicates collapse, loops are errors."""
    if n < 1:
        raise InvalidParameter(f"vertex count must be positive, got {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise InvalidVertex(f"edge ({u}, {v}) leaves vertex range 0..{n - 1}")
        if u == v:
            raise InvalidEdge(f"self-loop at vertex {u}")
        seen.add((u, v) if u < v else (v, u))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in seen:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in adj), len(seen))


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop counts from ``source``; UNREACHABLE where no path exists."""
    if not (0 <= source < g.n):
        raise InvalidVertex(f"source {source} not in 0..{g.n - 1}")
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    adj = g.adj
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Full distance table via one BFS per source.  O(n^2) memory."""
    return DistanceMatrix(g.n, tuple(tuple(bfs_distances(g, s)) for s in range(g.n)))


def is_connected(g: Graph) -> bool:
    return UNREACHABLE not in bfs_distances(g, 0)


def _require_connected(g: Graph) -> None:
    dist = bfs_distances(g, 0)
    for v, d in enumerate(dist):
        if d == UNREACHABLE:
            raise Disconnected(f"no path between vertices 0 and {v}", witness=(0, v))


def _histogram_python(g: Graph) -> list[int]:
    counts = [0] * g.n
    adj = g.adj
    for s in range(g.n):
        seen = bytearray(g.n)
        seen[s] = 1
        frontier = [s]
        d = 0
        while frontier:
            counts[d] += len(frontier)
            d += 1
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if not seen[w]:
                        seen[w] = 1
                        nxt.append(w)
            frontier = nxt
    return counts


def _histogram_compiled(g: Graph) -> list[int]:
    n = g.n
    indptr = np.zeros(n + 1, dtype=np.int64)
    for v in range(n):
        indptr[v + 1] = indptr[v] + len(g.adj[v])
    indices = np.fromiter(
        (u for nbrs in g.adj for u in nbrs), dtype=np.int64, count=int(indptr[-1])
    )
    data = np.ones(len(indices), dtype=np.int8)
    mat = csr_matrix((data, indices, indptr), shape=(n, n))
    counts = np.zeros(n, dtype=np.int64)
    block = max(1, _CHUNK_CELLS // n)
    for start in range(0, n, block):
        rows = np.arange(start, min(start + block, n))
        dist = dijkstra(mat, directed=True, unweighted=True, indices=rows)
        part = np.bincount(dist.astype(np.int64).ravel(), minlength=n)
        counts[: len(part)] += part
    return [int(c) for c in counts]


def ordered_distance_histogram(g: Graph) -> list[int]:
    """Counts of ordered vertex pairs (u, v) by distance, diagonal included.

    Entry i is the number of ordered pairs at distance exactly i (so entry 0
    is n).  Raises Disconnected, with a witness pair, on disconnected input.
    Trailing zero entries are trimmed.
    """
    _require_connected(g)
    if g.n < _COMPILED_MIN_N:
        counts = _histogram_python(g)
    else:
        counts = _histogram_compiled(g)
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


def diameter(g: Graph) -> int:
    """Largest hop distance; requires a connected graph."""
    return len(ordered_distance_histogram(g)) - 1


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" header plus m "u v" lines; '#' starts a comment."""
    tokens: list[str] = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if body:
            tokens.extend(body.split())
    if len(tokens) < 2:
        raise FormatError("missing 'n m' header")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise FormatError(f"non-integer token in edge list: {exc}") from None
    n, m = values[0], values[1]
    body_vals = values[2:]
    if len(body_vals) != 2 * m:
        raise FormatError(f"expected {m} edges ({2 * m} endpoints), found {len(body_vals)} values")
    edges = [(body_vals[2 * i], body_vals[2 * i + 1]) for i in range(m)]
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def subgraph_is_tree(g: Graph) -> bool:
    """True when g is connected with exactly n - 1 edges."""
    return g.m == g.n - 1 and is_connected(g)


def degree_sequence(g: Graph) -> Sequence[int]:
    return [len(a) for a in g.adj]
