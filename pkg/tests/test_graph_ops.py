import random

import pytest

from wienerlab import (
    Disconnected,
    Poly,
    TrivialFactor,
    UnsupportedOp,
    build_graph,
    diameter,
    is_connected,
    ordered_wiener,
    wiener_polynomial,
)
from wienerlab.families import complete_bipartite, construct, cycle, path
from wienerlab.graph_ops import (
    GraphOp,
    OpStats,
    apply_op,
    closed_form_op_poly,
    grid_ordered_poly,
    ordered_path_poly,
)
from wienerlab.polynomial import q_analog
from wienerlab.verify import random_connected_graph

K2 = build_graph(2, [(0, 1)])


def test_join_builds_wheel():
    w5 = apply_op(GraphOp.JOIN, construct(cycle(4)), build_graph(1, []))
    hub = 4
    assert w5.degree(hub) == 4 and w5.m == 8
    assert wiener_polynomial(w5) == Poly((0, 8, 2))


def test_cartesian_square_is_four_cycle():
    q2 = apply_op(GraphOp.CARTESIAN, K2, K2)
    assert q2.m == 4 and all(q2.degree(v) == 2 for v in range(4))
    assert ordered_wiener(q2) == Poly((4, 8, 4))


def test_composition_of_edges_is_complete():
    k4 = apply_op(GraphOp.COMPOSITION, K2, K2)
    assert k4.m == 6 and diameter(k4) == 1


def test_symmetric_difference_of_edges():
    g = apply_op(GraphOp.SYMMETRIC_DIFFERENCE, K2, K2)
    assert wiener_polynomial(g) == Poly((0, 4, 2))
    stats = OpStats.from_graphs(K2, K2)
    assert closed_form_op_poly(GraphOp.SYMMETRIC_DIFFERENCE, stats) == Poly((0, 4, 2))


def test_join_formula_reproduces_bipartite():
    kbar2, kbar3 = build_graph(2, []), build_graph(3, [])
    stats = OpStats.from_graphs(kbar2, kbar3)
    formula = closed_form_op_poly(GraphOp.JOIN, stats)
    assert formula == Poly((0, 6, 4))
    assert formula == wiener_polynomial(apply_op(GraphOp.JOIN, kbar2, kbar3))
    assert formula == wiener_polynomial(construct(complete_bipartite(2, 3)))


def test_composition_with_edgeless_second_factor():
    p3 = construct(path(3))
    kbar2 = build_graph(2, [])
    stats = OpStats.from_graphs(p3, kbar2)
    formula = closed_form_op_poly(GraphOp.COMPOSITION, stats, wiener_polynomial(p3))
    assert formula == wiener_polynomial(apply_op(GraphOp.COMPOSITION, p3, kbar2))


def test_formula_rejects_trivial_and_tensor():
    stats = OpStats.from_graphs(K2, build_graph(1, []))
    with pytest.raises(TrivialFactor):
        closed_form_op_poly(GraphOp.JOIN, stats)
    with pytest.raises(UnsupportedOp):
        closed_form_op_poly(GraphOp.TENSOR, OpStats.from_graphs(K2, K2))


def test_tensor_bipartite_disconnects():
    product = apply_op(GraphOp.TENSOR, construct(path(2)), construct(path(4)))
    assert not is_connected(product)
    with pytest.raises(Disconnected):
        wiener_polynomial(product)


def test_tensor_with_odd_cycle_connects():
    product = apply_op(GraphOp.TENSOR, construct(cycle(3)), construct(path(3)))
    assert is_connected(product)
    wiener_polynomial(product)


def test_random_pairs_match_oracle():
    rng = random.Random(123)
    ops = [GraphOp.JOIN, GraphOp.COMPOSITION, GraphOp.DISJUNCTION, GraphOp.SYMMETRIC_DIFFERENCE]
    for op in ops:
        for _ in range(10):
            g1 = random_connected_graph(rng, rng.randint(2, 8), rng.uniform(0.2, 0.6))
            g2 = random_connected_graph(rng, rng.randint(2, 8), rng.uniform(0.2, 0.6))
            product = apply_op(op, g1, g2)
            formula = closed_form_op_poly(
                op, OpStats.from_graphs(g1, g2), wiener_polynomial(g1), wiener_polynomial(g2)
            )
            assert formula == wiener_polynomial(product), op
            assert diameter(product) <= 2 or op is GraphOp.COMPOSITION


def test_random_cartesian_ordered_identity():
    rng = random.Random(321)
    for _ in range(10):
        g1 = random_connected_graph(rng, rng.randint(2, 10), rng.uniform(0.2, 0.6))
        g2 = random_connected_graph(rng, rng.randint(2, 10), rng.uniform(0.2, 0.6))
        product = apply_op(GraphOp.CARTESIAN, g1, g2)
        formula = closed_form_op_poly(
            GraphOp.CARTESIAN, OpStats.from_graphs(g1, g2), wiener_polynomial(g1), wiener_polynomial(g2)
        )
        assert formula == ordered_wiener(product)


def test_grid_small_cases():
    assert grid_ordered_poly(2, 2) == Poly((4, 8, 4))
    assert grid_ordered_poly(1, 5) == ordered_path_poly(5)
    grid33 = apply_op(GraphOp.CARTESIAN, construct(path(3)), construct(path(3)))
    assert grid_ordered_poly(3, 3) == ordered_wiener(grid33)


def test_ordered_path_factor_identity():
    # (1 - q) * ordered_path_poly(m) == (1 + q) * m - 2q[m]
    one_minus_q = Poly((1, -1))
    for m in range(1, 40):
        lhs = one_minus_q * ordered_path_poly(m)
        rhs = Poly((1, 1)) * m - 2 * q_analog(m).shift(1)
        assert lhs == rhs, m
