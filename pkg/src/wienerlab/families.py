"""Named graph families with exact closed-form distance polynomials.

Each family offers three routes: an explicit construction (for the BFS
oracle), the closed-form polynomial, and the closed-form index.  The test
suite insists the three agree coefficient-exactly across parameter sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb

from .errors import InvalidParameter
from .graph_core import Graph, build_graph
from .polynomial import Poly


class FamilyKind(Enum):
    COMPLETE = "K"
    COMPLETE_BIPARTITE = "Kmn"
    WHEEL = "W"
    PETERSEN = "petersen"
    PATH = "P"
    EVEN_CYCLE = "Ceven"
    ODD_CYCLE = "Codd"
    HYPERCUBE = "Q"


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    a: int = 0
    b: int = 0


def complete(n: int) -> FamilySpec:
    return _validated(FamilySpec(FamilyKind.COMPLETE, n))


def complete_bipartite(m: int, n: int) -> FamilySpec:
    return _validated(FamilySpec(FamilyKind.COMPLETE_BIPARTITE, m, n))


def wheel(n: int) -> FamilySpec:
    return _validated(FamilySpec(FamilyKind.WHEEL, n))


def petersen() -> FamilySpec:
    return FamilySpec(FamilyKind.PETERSEN)


def path(n: int) -> FamilySpec:
    return _validated(FamilySpec(FamilyKind.PATH, n))


def cycle(n: int) -> FamilySpec:
    kind = FamilyKind.EVEN_CYCLE if n % 2 == 0 else FamilyKind.ODD_CYCLE
    return _validated(FamilySpec(kind, n))


def hypercube(n: int) -> FamilySpec:
    return _validated(FamilySpec(FamilyKind.HYPERCUBE, n))


def _validated(spec: FamilySpec) -> FamilySpec:
    k, a, b = spec.kind, spec.a, spec.b
    if k is FamilyKind.COMPLETE and a < 1:
        raise InvalidParameter("complete graph needs n >= 1")
    if k is FamilyKind.COMPLETE_BIPARTITE and (a < 1 or b < 1):
        raise InvalidParameter("complete bipartite graph needs m, n >= 1")
    if k is FamilyKind.WHEEL and a < 4:
        raise InvalidParameter("wheel needs n >= 4 (hub plus a cycle of length >= 3)")
    if k is FamilyKind.PATH and a < 1:
        raise InvalidParameter("path needs n >= 1")
    if k is FamilyKind.EVEN_CYCLE and (a < 4 or a % 2):
        raise InvalidParameter("even cycle needs even n >= 4")
    if k is FamilyKind.ODD_CYCLE and (a < 3 or a % 2 == 0):
        raise InvalidParameter("odd cycle needs odd n >= 3")
    if k is FamilyKind.HYPERCUBE and a < 1:
        raise InvalidParameter("hypercube needs dimension >= 1")
    return spec


def parse_family_spec(text: str) -> FamilySpec:
    """CLI syntax: "K:7", "Kmn:3,4", "W:6", "P:10", "C:9", "Q:5", "petersen"."""
    body = text.strip()
    if body.lower() == "petersen":
        return petersen()
    if ":" not in body:
        raise InvalidParameter(f"malformed family spec {text!r}")
    head, _, rest = body.partition(":")
    try:
        params = [int(x) for x in rest.split(",")]
    except ValueError:
        raise InvalidParameter(f"malformed family parameters in {text!r}") from None
    makers = {"K": complete, "W": wheel, "P": path, "C": cycle, "Q": hypercube}
    if head == "Kmn":
        if len(params) != 2:
            raise InvalidParameter("Kmn takes two parameters, e.g. Kmn:3,4")
        return complete_bipartite(*params)
    if head in makers and len(params) == 1:
        return makers[head](params[0])
    raise InvalidParameter(f"unknown family {head!r}")


def spec_to_text(spec: FamilySpec) -> str:
    k = spec.kind
    if k is FamilyKind.PETERSEN:
        return "petersen"
    if k is FamilyKind.COMPLETE_BIPARTITE:
        return f"Kmn:{spec.a},{spec.b}"
    heads = {
        FamilyKind.COMPLETE: "K",
        FamilyKind.WHEEL: "W",
        FamilyKind.PATH: "P",
        FamilyKind.EVEN_CYCLE: "C",
        FamilyKind.ODD_CYCLE: "C",
        FamilyKind.HYPERCUBE: "Q",
    }
    return f"{heads[k]}:{spec.a}"


def construct(spec: FamilySpec) -> Graph:
    """Build the named graph.  Wheel hub is the last vertex; the Petersen
    graph is realized as the Kneser graph on 2-subsets of a 5-set."""
    _validated(spec)
    k, a, b = spec.kind, spec.a, spec.b
    if k is FamilyKind.COMPLETE:
        return build_graph(a, combinations(range(a), 2))
    if k is FamilyKind.COMPLETE_BIPARTITE:
        return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if k is FamilyKind.WHEEL:
        rim = a - 1
        edges = [(i, (i + 1) % rim) for i in range(rim)]
        edges += [(i, rim) for i in range(rim)]
        return build_graph(a, edges)
    if k is FamilyKind.PETERSEN:
        pairs = list(combinations(range(5), 2))
        index = {p: i for i, p in enumerate(pairs)}
        edges = [
            (index[p], index[q])
            for p, q in combinations(pairs, 2)
            if not (set(p) & set(q))
        ]
        return build_graph(10, edges)
    if k is FamilyKind.PATH:
        return build_graph(a, [(i, i + 1) for i in range(a - 1)])
    if k in (FamilyKind.EVEN_CYCLE, FamilyKind.ODD_CYCLE):
        return build_graph(a, [(i, (i + 1) % a) for i in range(a)])
    if k is FamilyKind.HYPERCUBE:
        edges = [
            (x, x ^ (1 << bit))
            for x in range(1 << a)
            for bit in range(a)
            if x < x ^ (1 << bit)
        ]
        return build_graph(1 << a, edges)
    raise InvalidParameter(f"unhandled family {k}")


def closed_form_poly(spec: FamilySpec) -> Poly:
    """The exact distance polynomial of the family member."""
    _validated(spec)
    k, a, b = spec.kind, spec.a, spec.b
    if k is FamilyKind.COMPLETE:
        return Poly((0, comb(a, 2)))
    if k is FamilyKind.COMPLETE_BIPARTITE:
        return Poly((0, a * b, comb(a, 2) + comb(b, 2)))
    if k is FamilyKind.WHEEL:
        return Poly((0, 2 * a - 2, (a - 1) * (a - 4) // 2))
    if k is FamilyKind.PETERSEN:
        return Poly((0, 15, 30))
    if k is FamilyKind.PATH:
        return Poly((0,) + tuple(a - i for i in range(1, a)))
    if k is FamilyKind.EVEN_CYCLE:
        half = a // 2
        return Poly((0,) + (a,) * (half - 1) + (half,))
    if k is FamilyKind.ODD_CYCLE:
        half = (a - 1) // 2
        return Poly((0,) + (a,) * half)
    if k is FamilyKind.HYPERCUBE:
        return Poly((0,) + tuple(2 ** (a - 1) * comb(a, i) for i in range(1, a + 1)))
    raise InvalidParameter(f"unhandled family {k}")


def closed_form_index(spec: FamilySpec) -> int:
    """The exact distance sum of the family member."""
    _validated(spec)
    k, a, b = spec.kind, spec.a, spec.b
    if k is FamilyKind.COMPLETE:
        return comb(a, 2)
    if k is FamilyKind.COMPLETE_BIPARTITE:
        return (a + b) ** 2 - a * b - a - b
    if k is FamilyKind.WHEEL:
        return (a - 1) * (a - 2)
    if k is FamilyKind.PETERSEN:
        return 75
    if k is FamilyKind.PATH:
        return comb(a + 1, 3)
    if k is FamilyKind.EVEN_CYCLE:
        return a**3 // 8
    if k is FamilyKind.ODD_CYCLE:
        return (a + 1) * a * (a - 1) // 8
    if k is FamilyKind.HYPERCUBE:
        return a * 2 ** (2 * a - 2)
    raise InvalidParameter(f"unhandled family {k}")
