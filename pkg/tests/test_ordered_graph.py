from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import partial_graphs
from gucycles.families import perm_graph
from gucycles.ordered_graph import (
    GraphError,
    OrderedPartialGraph,
    OverlapError,
    WindowError,
    WindowRef,
    from_mask,
    graph,
    mask_pairs,
    ordered_iso,
    overlaps_by,
    pair_mask,
    pairs,
    realizations,
    reduce,
    window,
)


def test_pairs_lex_order_and_mask_roundtrip():
    assert pairs(4) == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
    assert pair_mask([(1, 2)], 4) == 1
    assert pair_mask([(3, 4)], 4) == 1 << 5
    for m in range(64):
        assert pair_mask(mask_pairs(m, 4), 4) == m


def test_invalid_graphs_rejected():
    with pytest.raises(GraphError):
        graph(3, [[1, 4]])
    with pytest.raises(GraphError):
        graph(3, [[1, 2]], [[[1, 2]]])
    with pytest.raises(GraphError):
        graph(3, [], [[[1, 2]], [[1, 2], [2, 3]]])
    with pytest.raises(GraphError):
        OrderedPartialGraph(3, frozenset(), (frozenset(),))
    with pytest.raises(GraphError):
        graph(2, [[1, 1]])


def test_equality_ignores_group_order():
    a = graph(4, [], [[[1, 2]], [[3, 4], [1, 4]]])
    b = graph(4, [], [[[4, 3], [1, 4]], [[2, 1]]])
    assert a == b and hash(a) == hash(b)
    assert a != graph(4, [], [[[1, 2], [3, 4], [1, 4]]])


def test_reduce_relabels_in_order():
    g = reduce([2, 5, 9], [(2, 5), (5, 9)])
    assert g == graph(3, [[1, 2], [2, 3]])
    h = graph(3, [[1, 3]])
    assert reduce(h) == h
    assert reduce([10, 3, 7], [(3, 10)], [[(7, 10)]]) == graph(3, [[1, 3]], [[[2, 3]]])


def test_reduce_window_of_labeled_cycle(fixture):
    g = fixture("labeled3_gucycle")
    assert window(g, 3, 3) == graph(3, [[1, 2], [2, 3]])


def test_ordered_iso_examples():
    assert ordered_iso(graph(2, [[1, 2]]), graph(2, [[1, 2]]))
    assert not ordered_iso(graph(3, [[1, 2], [2, 3]]), graph(3, [[1, 2], [1, 3]]))


def test_gupcycle_windows_1_and_2_differ(fixture):
    g = fixture("labeled3_gupcycle5")
    assert not ordered_iso(window(g, 1, 3), window(g, 2, 3))


def test_window_with_diamond_and_realizations(fixture):
    g = fixture("labeled3_gupcycle7")
    w = window(g, 3, 3)
    assert w == graph(3, [[1, 2], [2, 3]], [[[1, 3]]])
    assert realizations(g, 3, 3) == {graph(3, [[1, 2], [2, 3]]), graph(3, [[1, 2], [1, 3], [2, 3]])}


def test_wrapping_window_uses_cyclic_edge(fixture):
    g = fixture("labeled3_gucycle")
    # window 7,8,1 contains the pair {7,8} as its first pair
    w = window(g, WindowRef(7, 3, wraps=True))
    assert (1, 2) in w.edges
    assert w == graph(3, [[1, 2]])


def test_window_errors():
    g = graph(4, [[1, 2]])
    with pytest.raises(WindowError):
        window(g, 3, 3)
    with pytest.raises(WindowError):
        window(g, WindowRef(3, 2, wraps=True))
    with pytest.raises(WindowError):
        window(g, 1, 5)


def test_full_window_is_reduce():
    g = graph(5, [[1, 5], [2, 3]], [[[1, 2], [4, 5]]])
    assert window(g, 1, 5) == reduce(g)


def test_group_pairs_outside_window_are_ignored():
    g = graph(5, [], [[[1, 2], [4, 5]]])
    assert window(g, 1, 3) == graph(3, [], [[[1, 2]]])
    assert len(realizations(g, 1, 3)) == 2
    assert realizations(g, 2, 3) == {graph(3)}


@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
def test_independent_singleton_diamonds_give_2_to_k(k):
    # k diamond pairs inside one window of size 5; brute-force subsets for the oracle
    ps = list(combinations(range(1, 6), 2))[:k]
    g = OrderedPartialGraph(5, frozenset(), tuple(frozenset([p]) for p in ps))
    brute = set()
    for sub in range(1 << k):
        brute.add(OrderedPartialGraph(5, frozenset(p for t, p in enumerate(ps) if sub >> t & 1)))
    assert realizations(g, 1, 5) == brute
    assert len(brute) == 2**k


def test_overlaps_by_examples(fixture):
    e = graph(2, [[1, 2]])
    assert overlaps_by(e, e, 1)
    assert not overlaps_by(perm_graph((1, 2, 3)), perm_graph((3, 2, 1)), 2)
    g = fixture("labeled3_gucycle")
    for k in range(1, 9):
        a, b = window(g, k, 3), window(g, k % 8 + 1, 3)
        assert overlaps_by(a, b, 2)
    with pytest.raises(OverlapError):
        overlaps_by(e, e, 2)


@given(partial_graphs())
@settings(deadline=None)
def test_reduce_idempotent(g):
    assert reduce(reduce(g)) == reduce(g)


@given(partial_graphs(max_n=4), partial_graphs(max_n=4), partial_graphs(max_n=4))
@settings(deadline=None)
def test_ordered_iso_is_equivalence(a, b, c):
    assert ordered_iso(a, a)
    assert ordered_iso(a, b) == ordered_iso(b, a)
    if ordered_iso(a, b) and ordered_iso(b, c):
        assert ordered_iso(a, c)


@given(partial_graphs(min_n=3, max_n=9), st.data())
@settings(deadline=None)
def test_cyclic_host_has_one_window_per_start(g, data):
    c = g.as_cyclic()
    k = data.draw(st.integers(1, c.n))
    wins = [window(c, s, k) for s in range(1, c.n + 1)]
    assert len(wins) == c.n
    with pytest.raises(WindowError):
        window(c, c.n + 1, k)


@given(partial_graphs(min_n=2, max_n=6), st.data())
@settings(deadline=None)
def test_realization_count_bounded(g, data):
    k = data.draw(st.integers(1, g.n))
    s = data.draw(st.integers(1, g.n - k + 1))
    w = window(g, s, k)
    assert 1 <= len(realizations(g, s, k)) <= 2 ** len(w.diamond_groups)
    if all(len(grp) == 1 for grp in w.diamond_groups):
        assert len(realizations(g, s, k)) == 2 ** len(w.diamond_groups)


@given(st.integers(0, 63))
def test_from_mask_roundtrip(m):
    assert from_mask(m, 4).edge_mask() == m
