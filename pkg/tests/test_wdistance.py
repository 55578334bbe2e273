import random
from math import comb

import pytest

from wienerlab import (
    Disconnected,
    InfeasiblePair,
    InvalidVertex,
    InvalidWidth,
    Poly,
    TooLarge,
    build_graph,
    wiener_polynomial,
)
from wienerlab.families import complete, complete_bipartite, construct, cycle, petersen
from wienerlab.graph_core import all_pairs_distances
from wienerlab.verify import random_connected_graph
from wienerlab.wdistance import max_disjoint_paths, w_distance, w_wiener_poly


def test_cycle_cases():
    c6 = construct(cycle(6))
    assert w_distance(c6, 0, 3, 2) == 3
    assert w_distance(c6, 0, 1, 2) == 5


def test_width_one_is_plain_distance():
    rng = random.Random(31)
    for _ in range(25):
        g = random_connected_graph(rng, rng.randint(2, 14), rng.uniform(0.1, 0.6))
        dm = all_pairs_distances(g)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                assert w_distance(g, u, v, 1) == dm.distance(u, v)


def test_cycle_two_width_law():
    for n in range(3, 11):
        g = construct(cycle(n))
        dm = all_pairs_distances(g)
        for u in range(n):
            for v in range(u + 1, n):
                assert w_distance(g, u, v, 2) == n - dm.distance(u, v)


def test_w_poly_of_five_cycle():
    assert w_wiener_poly(construct(cycle(5)), 2).poly == Poly((0, 0, 0, 5, 5))


def test_w_poly_reduces_at_width_one():
    rng = random.Random(77)
    for _ in range(10):
        g = random_connected_graph(rng, rng.randint(2, 12), rng.uniform(0.2, 0.6))
        report = w_wiener_poly(g, 1)
        assert report.poly == wiener_polynomial(g)
        assert report.poly.evaluate(1) == comb(g.n, 2)
        assert not report.infeasible_pairs


def test_petersen_width_three():
    g = construct(petersen())
    report = w_wiener_poly(g, 3)
    assert not report.infeasible_pairs  # 3-connected
    assert report.poly.coeff(0) == 0 and report.poly.coeff(1) == 0
    assert report.poly.evaluate(1) == comb(10, 2)


def test_monotone_in_width_on_complete_graph():
    g = construct(complete(6))
    for u in range(6):
        for v in range(u + 1, 6):
            values = [w_distance(g, u, v, w) for w in range(1, 6)]
            assert all(values[i] <= values[i + 1] for i in range(4))


def test_max_disjoint_paths_values():
    assert max_disjoint_paths(construct(complete(5)), 0, 4) == 4
    assert max_disjoint_paths(construct(cycle(6)), 0, 3) == 2
    star = construct(complete_bipartite(1, 3))
    assert max_disjoint_paths(star, 1, 2) == 1


def test_infeasible_handling():
    star = construct(complete_bipartite(1, 3))
    assert w_distance(star, 1, 2, 2) is None
    with pytest.raises(InfeasiblePair):
        w_wiener_poly(star, 2)
    report = w_wiener_poly(star, 2, partial=True)
    assert report.poly.is_zero
    assert len(report.infeasible_pairs) == 6


def test_validation():
    g = construct(cycle(5))
    with pytest.raises(InvalidWidth):
        w_distance(g, 0, 1, 0)
    with pytest.raises(InvalidVertex):
        w_distance(g, 0, 0, 1)
    with pytest.raises(InvalidVertex):
        w_distance(g, 0, 9, 1)
    with pytest.raises(TooLarge):
        w_wiener_poly(construct(cycle(15)), 1)
    with pytest.raises(Disconnected):
        w_wiener_poly(build_graph(4, [(0, 1), (2, 3)]), 1)
