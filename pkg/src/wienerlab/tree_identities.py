"""Distance-sum identities special to trees, plus labeled-tree enumeration.

The edge-cut identity sums n1(e) * n2(e) over edges; the triple-product
identity subtracts a correction over high-degree vertices from C(n+1, 3).
Labeled trees are enumerated and sampled through the bijection between
sequences in {0..n-1}^(n-2) and trees (Pruefer decoding), which also yields
the distance sum in the same pass via component-size accumulation.
"""

from __future__ import annotations

import random
from itertools import product
from math import comb

from .errors import InvalidParameter, NotATree, TooLarge
from .graph_core import Graph, build_graph
from .graph_core import UNREACHABLE, bfs_distances


def _rooted_order(t: Graph) -> tuple[list[int], list[int]]:
    """BFS order and parent array from vertex 0; raises NotATree otherwise."""
    n = t.n
    if t.m != n - 1:
        raise NotATree(f"expected {n - 1} edges, found {t.m}")
    parent = [UNREACHABLE] * n
    order = [0]
    seen = bytearray(n)
    seen[0] = 1
    for u in order:
        for w in t.adj[u]:
            if not seen[w]:
                seen[w] = 1
                parent[w] = u
                order.append(w)
    if len(order) != n:
        raise NotATree("graph is not connected")
    return order, parent


def _subtree_sizes(t: Graph, order: list[int], parent: list[int]) -> list[int]:
    size = [1] * t.n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    return size


def wiener_edge_cut(t: Graph) -> int:
    """Distance sum as the sum over edges of the two component sizes' product."""
    order, parent = _rooted_order(t)
    size = _subtree_sizes(t, order, parent)
    n = t.n
    return sum(size[v] * (n - size[v]) for v in order[1:])


def wiener_gutman(t: Graph) -> int:
    """Distance sum as C(n+1, 3) minus triple products of component sizes.

    For each vertex, the components of the vertex-deleted tree have sizes
    given by child subtrees plus the complement; their third elementary
    symmetric function is accumulated without cubic loops.
    """
    order, parent = _rooted_order(t)
    size = _subtree_sizes(t, order, parent)
    n = t.n
    correction = 0
    for v in range(n):
        if len(t.adj[v]) < 3:
            continue
        e1 = e2 = e3 = 0
        for u in t.adj[v]:
            s = size[u] if parent[u] == v else n - size[v]
            e3 += e2 * s
            e2 += e1 * s
            e1 += s
        correction += e3
    return comb(n + 1, 3) - correction


def decode_tree_sequence(seq: tuple[int, ...], n: int) -> Graph:
    """The labeled tree on n vertices encoded by ``seq`` in {0..n-1}^(n-2)."""
    if n < 2:
        raise InvalidParameter(f"need at least two vertices, got {n}")
    if len(seq) != n - 2:
        raise InvalidParameter(f"sequence length must be {n - 2}, got {len(seq)}")
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    ptr = 0
    leaf = -1
    for v in seq:
        if leaf < 0:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
        edges.append((leaf, v))
        degree[leaf] = 0
        degree[v] -= 1
        leaf = v if (degree[v] == 1 and v < ptr) else -1
    u = degree.index(1)
    w = degree.index(1, u + 1)
    edges.append((u, w))
    return build_graph(n, edges)


def _wiener_of_sequence(seq: tuple[int, ...], n: int) -> int:
    """Distance sum of the decoded tree, accumulated during decoding.

    Removing a leaf cuts the tree into its gathered component and the rest,
    so every decode step contributes one edge-cut term.
    """
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    comp = [1] * n
    total = 0
    ptr = 0
    leaf = -1
    for v in seq:
        if leaf < 0:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
        c = comp[leaf]
        total += c * (n - c)
        comp[v] += c
        degree[leaf] = 0
        degree[v] -= 1
        leaf = v if (degree[v] == 1 and v < ptr) else -1
    u = degree.index(1)
    c = comp[u]
    total += c * (n - c)
    return total


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labeled tree, by decoding a uniform sequence."""
    if n == 1:
        return build_graph(1, [])
    seq = tuple(rng.randrange(n) for _ in range(n - 2))
    return decode_tree_sequence(seq, n)


def path_is_max(n: int) -> bool:
    """Exhaustively confirm that paths maximize the distance sum over trees.

    Decodes all n^(n-2) sequences, so n is capped at 9 (about 4.8 million
    trees).  Returns True when the maximum distance sum equals C(n+1, 3)
    and every maximizing tree is a path.
    """
    if n < 2:
        raise InvalidParameter(f"need at least two vertices, got {n}")
    if n > 9:
        raise TooLarge(f"exhaustive enumeration is capped at n = 9, got {n}")
    target = comb(n + 1, 3)
    if n == 2:
        return _wiener_of_sequence((), 2) == target
    attained = False
    for seq in product(range(n), repeat=n - 2):
        w = _wiener_of_sequence(seq, n)
        if w > target:
            return False
        if w == target:
            attained = True
            # a tree is a path iff no vertex repeats in its sequence
            if len(set(seq)) != n - 2:
                return False
    return attained


def tree_distance_sum(t: Graph) -> int:
    """Plain BFS distance sum, used as the independent check on the identities."""
    _rooted_order(t)
    total = 0
    for s in range(t.n):
        total += sum(bfs_distances(t, s))
    return total // 2
