from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biconvex import (
    BipartiteGraph,
    BudgetExceeded,
    CrossPair,
    InvalidPermutation,
    NotConnected,
    find_biconvex_ordering,
    find_biconvex_s_ordering,
    find_cross_pairs,
    gen_random_bipartite,
    is_biconvex,
    is_connected,
    is_convex_side,
    is_s_ordering,
    oracle_is_biconvex,
)
from biconvex.orderings import DualOrdering

from .conftest import natural


def test_convex_side_fig1(fig1):
    assert is_convex_side(fig1, (1, 2, 3), "a")


def test_convex_side_trivial_neighborhoods():
    # all neighborhoods of size <= 1: every order works on both sides
    g = BipartiteGraph(2, 3, [(1, 2), (2, 3)])
    for order in permutations((1, 2, 3)):
        assert is_convex_side(g, order, "a")
    for order in permutations((1, 2)):
        assert is_convex_side(g, order, "b")


def test_convex_side_c6_always_fails(c6):
    # three distinct neighbor pairs cannot all be adjacent slots of 3 positions
    assert all(not is_convex_side(c6, order, "a") for order in permutations((1, 2, 3)))


def test_convex_side_validates_permutation(fig1):
    with pytest.raises(InvalidPermutation):
        is_convex_side(fig1, (1, 2), "a")
    with pytest.raises(ValueError):
        is_convex_side(fig1, (1, 2, 3), "x")


def test_biconvex_k22(k22):
    d = natural(k22)
    assert is_biconvex(k22, d)
    assert d.verified_biconvex


def test_biconvex_staircase(staircase7):
    assert is_biconvex(staircase7, natural(staircase7))


def test_fig1_not_biconvex_exhaustive(fig1):
    for sa in permutations((1, 2, 3, 4)):
        for sb in permutations((1, 2, 3)):
            assert not is_biconvex(fig1, DualOrdering(sa, sb))


def test_cross_pairs_k22(k22):
    pairs = find_cross_pairs(k22, natural(k22))
    assert pairs == [CrossPair((1, 2), (2, 1))]


def test_cross_pairs_star_any_order():
    # every edge shares the center, so no pair can cross
    g = BipartiteGraph(1, 4, [(1, j) for j in range(1, 5)])
    for sb in permutations((1, 2, 3, 4)):
        assert find_cross_pairs(g, DualOrdering((1,), sb)) == []


def test_cross_pairs_disjoint_star_blocks():
    # two stars laid out block after block
    g = BipartiteGraph(2, 4, [(1, 1), (1, 2), (2, 3), (2, 4)])
    assert find_cross_pairs(g, natural(g)) == []


def test_cross_pairs_staircase_empty(staircase7):
    assert find_cross_pairs(staircase7, natural(staircase7)) == []


def test_s_ordering_k22(k22):
    d = natural(k22)
    assert is_s_ordering(k22, d)
    assert d.verified_straight


def test_s_ordering_staircase_vacuous(staircase7):
    assert is_s_ordering(staircase7, natural(staircase7))


def test_s_ordering_nested_chain():
    g = BipartiteGraph(2, 2, [(1, 1), (1, 2), (2, 2)])
    assert is_s_ordering(g, natural(g))


def test_s_ordering_detects_violation():
    # two parallel edges with inverted endpoints and no rectifying edge
    g = BipartiteGraph(2, 2, [(1, 2), (2, 1)])
    d = natural(g)
    assert not is_s_ordering(g, d)
    assert not d.verified_straight


def test_straight_flag_needs_biconvexity(c6):
    d = natural(c6)
    is_s_ordering(c6, d)
    assert not d.verified_straight  # reported, but c6 is not biconvex


graphs_and_orders = st.integers(0, 5_000).map(
    lambda seed: _graph_with_random_order(seed)
)


def _graph_with_random_order(seed):
    import random

    rng = random.Random(seed)
    g = gen_random_bipartite(rng.randint(1, 5), rng.randint(1, 5), 0.6, seed)
    sa = list(range(1, g.n_a + 1))
    sb = list(range(1, g.n_b + 1))
    rng.shuffle(sa)
    rng.shuffle(sb)
    return g, DualOrdering(tuple(sa), tuple(sb))


@given(graphs_and_orders)
@settings(max_examples=120, deadline=None)
def test_s_ordering_agrees_with_cross_pair_scan(case):
    # double implementation: the interval/edge scan vs rectifying each listed pair
    g, d = case
    rectified = all(
        g.has_edge(p.edge1[0], p.edge2[1]) or g.has_edge(p.edge2[0], p.edge1[1])
        for p in find_cross_pairs(g, d)
    )
    assert is_s_ordering(g, d) == rectified


@given(graphs_and_orders)
@settings(max_examples=80, deadline=None)
def test_reversing_both_orders_preserves_predicates(case):
    g, d = case
    r = d.reversed()
    assert is_biconvex(g, d) == is_biconvex(g, r)
    assert is_s_ordering(g, d) == is_s_ordering(g, r)


def test_find_biconvex_ordering_fig1_provably_none(fig1):
    assert find_biconvex_ordering(fig1, budget=None) is None


def test_find_biconvex_ordering_staircase(staircase7):
    d = find_biconvex_ordering(staircase7)
    assert d is not None and d.verified_biconvex
    assert is_biconvex(staircase7, d)


def test_find_biconvex_ordering_k2():
    g = BipartiteGraph(1, 1, [(1, 1)])
    d = find_biconvex_ordering(g)
    assert d.order_a == (1,) and d.order_b == (1,)


def test_find_biconvex_ordering_budget(c6):
    with pytest.raises(BudgetExceeded):
        find_biconvex_ordering(c6, budget=2)


def test_find_biconvex_ordering_rejects_disconnected():
    g = BipartiteGraph(2, 1, [(1, 1)])
    with pytest.raises(NotConnected):
        find_biconvex_ordering(g)


def test_find_s_ordering_k22(k22):
    d = find_biconvex_s_ordering(k22)
    assert d is not None and d.verified_biconvex and d.verified_straight


def test_find_s_ordering_chain():
    g = BipartiteGraph(2, 2, [(1, 2), (2, 1), (2, 2)])
    d = find_biconvex_s_ordering(g)
    assert d is not None
    assert is_biconvex(g, d) and is_s_ordering(g, d)


def test_find_s_ordering_fig1_provably_none(fig1):
    assert find_biconvex_s_ordering(fig1, budget=None) is None


def test_find_s_ordering_c6_provably_none(c6):
    assert find_biconvex_s_ordering(c6, budget=None) is None


@pytest.mark.parametrize("seed", range(40))
def test_straight_ordering_exists_whenever_biconvex(seed):
    # the spanning-caterpillar search depends on this implication
    import random

    rng = random.Random(seed)
    g = gen_random_bipartite(rng.randint(1, 5), rng.randint(1, 5), 0.5, seed)
    if not is_connected(g):
        return
    if oracle_is_biconvex(g) is None:
        return
    assert find_biconvex_s_ordering(g, budget=None) is not None
