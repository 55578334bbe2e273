"""Cross-validation suites: every closed form against the BFS oracle.

Each check returns a CheckResult; ``run_all`` drives the whole matrix at a
chosen budget.  The "small" budget keeps the full run under a few minutes;
"full" matches the sweep sizes used by the acceptance tests.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from . import coxeter_bridge, dendrimer, families, graph_ops, tree_identities, wdistance
from .errors import Disconnected
from .graph_core import Graph, all_pairs_distances, build_graph, diameter, is_connected
from .graph_ops import GraphOp, OpStats, apply_op, closed_form_op_poly, grid_ordered_poly
from .polynomial import Poly, analyze_sequence, factor_negative_rational_roots
from .wiener_engine import (
    ordered_wiener,
    relative_wiener,
    verify_basic_properties,
    wiener_polynomial,
)


@dataclass(frozen=True)
class Budget:
    name: str
    path_max: int
    cycle_max: int
    complete_max: int
    wheel_max: int
    bipartite_sum_max: int
    hypercube_max: int
    ops_pairs: int
    ops_factor_max: int
    ops_cartesian_max: int
    grid_max: int
    dend_sweep_max: int
    dend_random: int
    dend_random_max: int
    dend_tele_max: int
    complete_dend_levels: int
    complete_dend_arity: int
    gf_levels: int
    unimodal_max: int
    pk_level_max: int
    pk_arity_max: int
    trees_random: int
    trees_size_max: int
    tree_enum_max: int
    coxeter_sn_max: int
    wdist_random: int
    wdist_cycle_max: int
    wdist_corpus_max_n: int
    engine_graphs: int
    engine_size_max: int


SMALL = Budget(
    name="small",
    path_max=60,
    cycle_max=60,
    complete_max=40,
    wheel_max=40,
    bipartite_sum_max=40,
    hypercube_max=6,
    ops_pairs=12,
    ops_factor_max=8,
    ops_cartesian_max=12,
    grid_max=6,
    dend_sweep_max=150,
    dend_random=40,
    dend_random_max=400,
    dend_tele_max=400,
    complete_dend_levels=4,
    complete_dend_arity=4,
    gf_levels=5,
    unimodal_max=400,
    pk_level_max=4,
    pk_arity_max=4,
    trees_random=120,
    trees_size_max=80,
    tree_enum_max=7,
    coxeter_sn_max=5,
    wdist_random=30,
    wdist_cycle_max=10,
    wdist_corpus_max_n=10,
    engine_graphs=40,
    engine_size_max=32,
)

FULL = Budget(
    name="full",
    path_max=200,
    cycle_max=200,
    complete_max=100,
    wheel_max=100,
    bipartite_sum_max=100,
    hypercube_max=8,
    ops_pairs=50,
    ops_factor_max=12,
    ops_cartesian_max=20,
    grid_max=8,
    dend_sweep_max=500,
    dend_random=200,
    dend_random_max=2000,
    dend_tele_max=2000,
    complete_dend_levels=6,
    complete_dend_arity=4,
    gf_levels=6,
    unimodal_max=2000,
    pk_level_max=6,
    pk_arity_max=6,
    trees_random=500,
    trees_size_max=200,
    tree_enum_max=9,
    coxeter_sn_max=6,
    wdist_random=100,
    wdist_cycle_max=12,
    wdist_corpus_max_n=10,
    engine_graphs=100,
    engine_size_max=64,
)

BUDGETS = {"small": SMALL, "full": FULL}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _timed(name: str, fn) -> CheckResult:
    start = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:  # a check must never crash the matrix
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, passed, detail, time.perf_counter() - start)


def random_connected_graph(rng: random.Random, n: int, extra_edge_prob: float = 0.2) -> Graph:
    """Random attachment tree plus independent extra edges; always connected."""
    if n == 1:
        return build_graph(1, [])
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_edge_prob:
                edges.add((u, v))
    return build_graph(n, edges)


# --- individual checks ----------------------------------------------------


def check_petersen() -> CheckResult:
    def run():
        g = families.construct(families.petersen())
        poly = wiener_polynomial(g)
        ok = (
            poly == Poly((0, 15, 30))
            and poly.derivative_at_one() == 75
            and diameter(g) == 2
        )
        return ok, f"poly={poly}, index={poly.derivative_at_one()}, diameter={diameter(g)}"

    return _timed("petersen_exact", run)


def _family_specs(budget: Budget):
    for n in range(1, budget.complete_max + 1):
        yield families.complete(n)
    for n in range(1, budget.path_max + 1):
        yield families.path(n)
    for n in range(3, budget.cycle_max + 1):
        yield families.cycle(n)
    for n in range(4, budget.wheel_max + 1):
        yield families.wheel(n)
    for m in range(1, budget.bipartite_sum_max):
        for n in range(m, budget.bipartite_sum_max - m + 1):
            yield families.complete_bipartite(m, n)
    for n in range(1, budget.hypercube_max + 1):
        yield families.hypercube(n)
    yield families.petersen()


def check_family_closed_forms(budget: Budget) -> CheckResult:
    def run():
        count = 0
        for spec in _family_specs(budget):
            g = families.construct(spec)
            oracle = wiener_polynomial(g)
            if families.closed_form_poly(spec) != oracle:
                return False, f"polynomial mismatch at {families.spec_to_text(spec)}"
            if families.closed_form_index(spec) != oracle.derivative_at_one():
                return False, f"index mismatch at {families.spec_to_text(spec)}"
            count += 1
        return True, f"{count} family members, coefficient-exact"

    return _timed("family_closed_forms", run)


def check_graph_operations(seed: int, budget: Budget) -> CheckResult:
    unordered_ops = (
        GraphOp.JOIN,
        GraphOp.COMPOSITION,
        GraphOp.DISJUNCTION,
        GraphOp.SYMMETRIC_DIFFERENCE,
    )

    def run():
        rng = random.Random(seed)
        checked = 0
        for op in unordered_ops + (GraphOp.CARTESIAN,):
            cap = budget.ops_cartesian_max if op is GraphOp.CARTESIAN else budget.ops_factor_max
            for _ in range(budget.ops_pairs):
                g1 = random_connected_graph(rng, rng.randint(2, cap), rng.uniform(0.1, 0.5))
                g2 = random_connected_graph(rng, rng.randint(2, cap), rng.uniform(0.1, 0.5))
                product = apply_op(op, g1, g2)
                stats = OpStats.from_graphs(g1, g2)
                w1, w2 = wiener_polynomial(g1), wiener_polynomial(g2)
                formula = closed_form_op_poly(op, stats, w1, w2)
                oracle = ordered_wiener(product) if op is GraphOp.CARTESIAN else wiener_polynomial(product)
                if formula != oracle:
                    return False, f"{op.value} mismatch on n1={g1.n}, n2={g2.n}"
                if op in (GraphOp.JOIN, GraphOp.DISJUNCTION, GraphOp.SYMMETRIC_DIFFERENCE):
                    if diameter(product) > 2:
                        return False, f"{op.value} produced diameter > 2"
                checked += 1
        # tensor has no formula; confirm the oracle route and the bipartite trap
        bip = apply_op(GraphOp.TENSOR, families.construct(families.path(2)), families.construct(families.path(3)))
        try:
            wiener_polynomial(bip)
            return False, "tensor of two bipartite factors should be disconnected"
        except Disconnected:
            pass
        odd = apply_op(GraphOp.TENSOR, families.construct(families.cycle(3)), families.construct(families.path(3)))
        wiener_polynomial(odd)  # connected; must not raise
        checked += 2
        return True, f"{checked} operation instances, coefficient-exact"

    return _timed("graph_operation_forms", run)


def check_grid_corollary(budget: Budget) -> CheckResult:
    def run():
        for m in range(1, budget.grid_max + 1):
            for n in range(1, budget.grid_max + 1):
                grid = apply_op(
                    GraphOp.CARTESIAN,
                    families.construct(families.path(m)),
                    families.construct(families.path(n)),
                )
                if grid_ordered_poly(m, n) != ordered_wiener(grid):
                    return False, f"grid mismatch at {m} x {n}"
        return True, f"all grids up to {budget.grid_max} x {budget.grid_max}"

    return _timed("grid_corollary", run)


def check_dendrimer_closed_form(seed: int, budget: Budget) -> CheckResult:
    def run():
        for d in (2, 3, 4):
            for n in range(1, budget.dend_sweep_max + 1):
                if dendrimer.closed_form(n, d) != wiener_polynomial(dendrimer.build_dendrimer(n, d)):
                    return False, f"oracle mismatch at n={n}, d={d}"
        rng = random.Random(seed)
        for _ in range(budget.dend_random):
            n = rng.randint(2, budget.dend_random_max)
            d = rng.choice((2, 3, 4, 5))
            if dendrimer.closed_form(n, d) != wiener_polynomial(dendrimer.build_dendrimer(n, d)):
                return False, f"oracle mismatch at random n={n}, d={d}"
        for d in (2, 3, 4):
            prev = dendrimer.closed_form(1, d)
            for n in range(2, budget.dend_tele_max + 1):
                cur = dendrimer.closed_form(n, d)
                delta = dendrimer.delta_wiener(n, d)
                if cur - prev != delta:
                    return False, f"telescoping broke at n={n}, d={d}"
                if delta.evaluate(1) != n - 1:
                    return False, f"difference coefficients at n={n}, d={d} do not sum to n-1"
                prev = cur
        return True, (
            f"sweep n<={budget.dend_sweep_max} x d in 2..4, {budget.dend_random} random, "
            f"telescoping n<={budget.dend_tele_max}"
        )

    return _timed("dendrimer_closed_form", run)


def check_complete_dendrimer_index(budget: Budget) -> CheckResult:
    def run():
        hand_values = {(1, 2): 9, (2, 2): 117, (1, 3): 16}
        for d in range(2, budget.complete_dend_arity + 1):
            for k in range(1, budget.complete_dend_levels + 1):
                n = dendrimer.thresholds(d, k).n_k - 1
                expected = dendrimer.closed_form(n, d).derivative_at_one()
                got = dendrimer.complete_wiener_index(k, d)
                if got != expected:
                    return False, f"index mismatch at k={k}, d={d}: {got} != {expected}"
                if (k, d) in hand_values and got != hand_values[(k, d)]:
                    return False, f"hand value mismatch at k={k}, d={d}"
        return True, f"levels 1..{budget.complete_dend_levels}, arity 2..{budget.complete_dend_arity}"

    return _timed("complete_dendrimer_index", run)


def check_generating_function(budget: Budget) -> CheckResult:
    def run():
        for d in (2, 3, 4):
            series = dendrimer.gf_expand(d, budget.gf_levels)
            if not series[0].is_zero:
                return False, f"z^0 coefficient nonzero for d={d}"
            for k in range(1, budget.gf_levels + 1):
                n = dendrimer.thresholds(d, k).n_k - 1
                if series[k] != dendrimer.closed_form(n, d):
                    return False, f"series coefficient mismatch at k={k}, d={d}"
        return True, f"levels 1..{budget.gf_levels} for d in 2..4"

    return _timed("dendrimer_generating_function", run)


def check_dendrimer_unimodality(budget: Budget) -> CheckResult:
    def run():
        for d in (2, 3, 4):
            for n in range(2, budget.unimodal_max + 1):
                dendrimer.unimodality_profile(n, d)  # raises on mismatch
        for d in range(2, budget.pk_arity_max + 1):
            for k in range(1, budget.pk_level_max + 1):
                p_k = dendrimer.thresholds(d, k).p_k
                poly = dendrimer.closed_form(p_k, d)
                c_even = poly.coeff(2 * k)
                c_odd = poly.coeff(2 * k + 1)
                c_top = poly.coeff(2 * k + 2)
                if not (c_odd == c_top == 3 * d ** (2 * k)):
                    return False, f"peak equalities failed at p_k, k={k}, d={d}"
                if c_even != 2 * d ** (2 * k - 1) * (d + 1):
                    return False, f"pre-peak value failed at p_k, k={k}, d={d}"
                if not (c_even <= c_odd) or ((c_even == c_odd) != (d == 2)):
                    return False, f"pre-peak comparison failed at p_k, k={k}, d={d}"
        return True, (
            f"profiles n<={budget.unimodal_max} x d in 2..4; peak equalities "
            f"k<={budget.pk_level_max}, d<={budget.pk_arity_max}"
        )

    return _timed("dendrimer_unimodality", run)


def check_tree_identities(seed: int, budget: Budget) -> CheckResult:
    def run():
        rng = random.Random(seed)
        for _ in range(budget.trees_random):
            t = tree_identities.random_tree(rng.randint(2, budget.trees_size_max), rng)
            cut = tree_identities.wiener_edge_cut(t)
            gut = tree_identities.wiener_gutman(t)
            oracle = wiener_polynomial(t).derivative_at_one()
            if not (cut == gut == oracle):
                return False, f"identity mismatch on tree n={t.n}: {cut}, {gut}, {oracle}"
        for n in range(2, budget.tree_enum_max + 1):
            if not tree_identities.path_is_max(n):
                return False, f"path maximality failed at n={n}"
        return True, (
            f"{budget.trees_random} random trees (n<={budget.trees_size_max}); "
            f"exhaustive maximality n<={budget.tree_enum_max}"
        )

    return _timed("tree_identities", run)


def check_coxeter(budget: Budget) -> CheckResult:
    def run():
        for n in range(2, budget.coxeter_sn_max + 1):
            census = coxeter_bridge.reflection_length_census(n)
            pi = coxeter_bridge.poincare_poly(coxeter_bridge.CoxeterSpec("A", n - 1))
            if Poly(tuple(census)) != pi:
                return False, f"length census disagrees with product form at n={n}"
            if not coxeter_bridge.verify_wgw(n):
                return False, f"ordered-polynomial identity failed at n={n}"
        for spec in coxeter_bridge.all_table_specs():
            pi = coxeter_bridge.poincare_poly(spec)
            roots = factor_negative_rational_roots(pi)
            expected = tuple(sorted(Fraction(-1, e) for e in coxeter_bridge.exponents(spec)))
            if roots != expected:
                return False, f"root recovery failed for {spec.family}{spec.rank}"
            verdict = analyze_sequence(pi, 0, factor=False)
            if not (verdict.log_concave and verdict.unimodal):
                return False, f"shape verdict failed for {spec.family}{spec.rank}"
        return True, f"symmetric groups to S_{budget.coxeter_sn_max}; all exponent tables factored"

    return _timed("coxeter_bridge", run)


def _three_connected_corpus(max_n: int) -> list[tuple[str, Graph]]:
    corpus = [
        ("K5", families.construct(families.complete(5))),
        ("K33", families.construct(families.complete_bipartite(3, 3))),
        ("octahedron", build_graph(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if u + 3 != v])),
        ("wheel6", families.construct(families.wheel(6))),
        ("prism", apply_op(GraphOp.CARTESIAN, families.construct(families.cycle(3)), families.construct(families.path(2)))),
        ("Q3", families.construct(families.hypercube(3))),
        ("petersen", families.construct(families.petersen())),
    ]
    out = []
    for name, g in corpus:
        if g.n > max_n:
            continue
        kappa = min(
            wdistance.max_disjoint_paths(g, u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
        )
        if kappa >= 3:
            out.append((name, g))
    return out


def check_wdistance(seed: int, budget: Budget) -> CheckResult:
    def run():
        rng = random.Random(seed)
        for _ in range(budget.wdist_random):
            g = random_connected_graph(rng, rng.randint(2, 14), rng.uniform(0.1, 0.6))
            report = wdistance.w_wiener_poly(g, 1)
            if report.poly != wiener_polynomial(g):
                return False, f"w=1 reduction failed on n={g.n}"
            if report.poly.evaluate(1) != comb(g.n, 2):
                return False, f"w=1 pair count failed on n={g.n}"
        for n in range(3, budget.wdist_cycle_max + 1):
            g = families.construct(families.cycle(n))
            dm = all_pairs_distances(g)
            for u in range(n):
                for v in range(u + 1, n):
                    if wdistance.w_distance(g, u, v, 2) != n - dm.distance(u, v):
                        return False, f"cycle law failed on C_{n} pair ({u}, {v})"
        checked_pairs = 0
        for name, g in _three_connected_corpus(budget.wdist_corpus_max_n):
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    d1 = wdistance.w_distance(g, u, v, 1)
                    d2 = wdistance.w_distance(g, u, v, 2)
                    d3 = wdistance.w_distance(g, u, v, 3)
                    if d2 is None or d3 is None or not (d1 <= d2 <= d3):
                        return False, f"monotonicity failed on {name} pair ({u}, {v})"
                    checked_pairs += 1
        return True, (
            f"{budget.wdist_random} w=1 reductions; cycles to C_{budget.wdist_cycle_max}; "
            f"{checked_pairs} monotone corpus pairs"
        )

    return _timed("w_distance", run)


def check_engine_properties(seed: int, budget: Budget) -> CheckResult:
    def run():
        rng = random.Random(seed)
        for _ in range(budget.engine_graphs):
            g = random_connected_graph(rng, rng.randint(1, budget.engine_size_max), rng.uniform(0.05, 0.5))
            w = wiener_polynomial(g)
            ordered = ordered_wiener(g)
            if ordered != 2 * w + g.n:
                return False, f"ordered identity failed on n={g.n}"
            if w.evaluate(1) != comb(g.n, 2):
                return False, f"pair count failed on n={g.n}"
            total = Poly()
            for v in range(g.n):
                total = total + relative_wiener(g, v)
            if total != ordered:
                return False, f"per-vertex sum failed on n={g.n}"
            if not verify_basic_properties(g).all_pass:
                return False, f"elementary properties failed on n={g.n}"
            if g.n <= 64:
                dm = np.array(all_pairs_distances(g).dist)
                if not np.array_equal(dm, dm.T):
                    return False, f"distance matrix asymmetric on n={g.n}"
                for k in range(g.n):
                    if not np.all(dm <= dm[:, k : k + 1] + dm[k : k + 1, :]):
                        return False, f"triangle inequality failed on n={g.n}"
        # factorization => log-concave => unimodal, on random linear-factor products
        for _ in range(200):
            factors = [rng.randint(1, 9) for _ in range(rng.randint(1, 6))]
            poly = Poly((rng.randint(1, 5),))
            for e in factors:
                poly = poly * Poly((1, e))
            verdict = analyze_sequence(poly, 0)
            expected_roots = tuple(sorted(Fraction(-1, e) for e in factors))
            if verdict.neg_rational_roots != expected_roots:
                return False, "root recovery failed on a random product"
            if not (verdict.log_concave and verdict.unimodal):
                return False, "implication chain failed on a random product"
        return True, f"{budget.engine_graphs} random graphs (n<={budget.engine_size_max}); 200 factor chains"

    return _timed("engine_properties", run)


def run_all(seed: int = 42, budget: Budget | str = SMALL, progress=None) -> list[CheckResult]:
    """Run every check; ``progress`` (if given) receives each CheckResult."""
    if isinstance(budget, str):
        budget = BUDGETS[budget]
    steps = [
        lambda: check_petersen(),
        lambda: check_family_closed_forms(budget),
        lambda: check_graph_operations(seed, budget),
        lambda: check_grid_corollary(budget),
        lambda: check_dendrimer_closed_form(seed, budget),
        lambda: check_complete_dendrimer_index(budget),
        lambda: check_generating_function(budget),
        lambda: check_dendrimer_unimodality(budget),
        lambda: check_tree_identities(seed, budget),
        lambda: check_coxeter(budget),
        lambda: check_wdistance(seed, budget),
        lambda: check_engine_properties(seed, budget),
    ]
    results = []
    for step in steps:
        result = step()
        results.append(result)
        if progress is not None:
            progress(result)
    return results
