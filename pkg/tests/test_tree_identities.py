import random
from itertools import product
from math import comb

import pytest

from wienerlab import InvalidParameter, NotATree, TooLarge, build_graph, wiener_index
from wienerlab.dendrimer import build_dendrimer, closed_form
from wienerlab.families import complete_bipartite, construct, cycle, path
from wienerlab.tree_identities import (
    _wiener_of_sequence,
    decode_tree_sequence,
    path_is_max,
    random_tree,
    tree_distance_sum,
    wiener_edge_cut,
    wiener_gutman,
)


def test_edge_cut_fixed_cases():
    assert wiener_edge_cut(construct(path(4))) == 10
    assert wiener_edge_cut(construct(complete_bipartite(1, 3))) == 9
    assert wiener_edge_cut(build_graph(2, [(0, 1)])) == 1


def test_gutman_fixed_cases():
    assert wiener_gutman(construct(path(4))) == 10
    assert wiener_gutman(construct(complete_bipartite(1, 3))) == 9
    assert wiener_gutman(construct(complete_bipartite(1, 4))) == 16


def test_paths_hit_binomial():
    for n in range(2, 30):
        assert wiener_gutman(construct(path(n))) == comb(n + 1, 3)


def test_rejects_non_trees():
    with pytest.raises(NotATree):
        wiener_edge_cut(construct(cycle(5)))
    with pytest.raises(NotATree):
        wiener_gutman(build_graph(4, [(0, 1), (2, 3), (1, 2), (3, 0)]))
    with pytest.raises(NotATree):
        tree_distance_sum(build_graph(3, [(0, 1)]))


def test_decode_covers_all_labeled_trees():
    for n, expect in [(4, 16), (5, 125)]:
        seen = set()
        for seq in product(range(n), repeat=n - 2):
            t = decode_tree_sequence(seq, n)
            assert t.m == n - 1
            seen.add(frozenset(t.edges()))
        assert len(seen) == expect


def test_decode_rejects_bad_lengths():
    with pytest.raises(InvalidParameter):
        decode_tree_sequence((0,), 2)
    with pytest.raises(InvalidParameter):
        decode_tree_sequence((), 1)


def test_sequence_wiener_matches_decode_plus_oracle():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randint(2, 10)
        seq = tuple(rng.randrange(n) for _ in range(n - 2))
        t = decode_tree_sequence(seq, n)
        assert _wiener_of_sequence(seq, n) == wiener_index(t)


def test_identities_agree_on_random_trees():
    rng = random.Random(23)
    for _ in range(80):
        t = random_tree(rng.randint(2, 120), rng)
        cut = wiener_edge_cut(t)
        assert cut == wiener_gutman(t) == tree_distance_sum(t) == wiener_index(t)


def test_identities_on_dendrimers():
    for d in (2, 3):
        for n in (2, 17, 100, 399, 1024):
            t = build_dendrimer(n, d)
            expected = closed_form(n, d).derivative_at_one()
            assert wiener_edge_cut(t) == expected
            assert wiener_gutman(t) == expected


def test_path_is_max_small():
    for n in range(2, 8):
        assert path_is_max(n)


def test_path_is_max_bounds():
    with pytest.raises(InvalidParameter):
        path_is_max(1)
    with pytest.raises(TooLarge):
        path_is_max(10)


def test_star_is_not_max():
    # the star (all sequence entries equal) has the smallest distance sum
    star_w = _wiener_of_sequence((0, 0), 4)
    assert star_w == 9 < 10 == comb(5, 3)
