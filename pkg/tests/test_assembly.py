import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_joined
from gucycles.assembly import (
    AssemblyError,
    check_restoration,
    cycle_to_word,
    cycle_windows,
    cyclic_glue,
    glue,
    glue_sequence,
    s_cyclic_glue,
    tour_from_cycle,
    tour_to_cycle,
)
from gucycles.euler import euler_tour
from gucycles.ordered_graph import OverlapError, graph, window
from gucycles.overlap_digraph import arc_digraph, build_perm_digraph, fully_compressed


def split(x, m, n, s):
    return window(x, 1, m), window(x, m - s + 1, n)


def test_glue_example():
    g = graph(3, [[1, 2], [2, 3]])
    h = graph(3, [[1, 2], [1, 3]])
    assert glue(g, h, 2) == graph(4, [[1, 2], [2, 3], [2, 4]])
    with pytest.raises(OverlapError):
        glue(h, g, 2)


def test_glue_unifies_groups_through_shared_pair():
    g = graph(3, [], [[[1, 3], [2, 3]]])
    h = graph(3, [], [[[1, 2], [1, 3]]])
    j = glue(g, h, 2)
    assert j == graph(4, [], [[[1, 3], [2, 3], [2, 4]]])


@given(st.integers(0, 10**9), st.integers(2, 5), st.integers(2, 5), st.data())
@settings(max_examples=150, deadline=None)
def test_glue_rebuilds_the_joined_graph(seed, m, n, data):
    s = data.draw(st.integers(1, min(m, n) - 1))
    x = random_joined(random.Random(seed), m, n, s)
    g, h = split(x, m, n, s)
    j = glue(g, h, s)
    assert j == x
    assert check_restoration(g, h, s, j)


def test_restoration_detects_cross_pairs():
    g = graph(3, [[1, 2]])
    h = graph(3, [[2, 3]])
    bad = graph(4, [[1, 2], [3, 4], [1, 4]])
    assert check_restoration(g, h, 2)
    assert not check_restoration(g, h, 2, bad)


def test_glue_sequence_matches_pairwise():
    rng = random.Random(7)
    x = random_joined(rng, 4, 4, 3, diamonds=False)
    g, h = split(x, 4, 4, 3)
    assert glue_sequence([g, h], 3) == glue(g, h, 3)


def test_cyclic_glue_closes_d3_tour(fixture):
    d = arc_digraph(3)
    t = euler_tour(d)
    lin = glue_sequence([d.edge(k).payload for k in t.edge_ids], 2)
    assert lin.n == 10
    j = cyclic_glue(lin, 3)
    assert j.n == 8 and j.cyclic
    assert cycle_windows(j, 3) == [d.edge(k).payload for k in t.edge_ids]
    assert tour_from_cycle(j, d, 1) == t


def test_short_closure_is_whitelisted(fixture):
    d = fully_compressed(3)
    j = tour_to_cycle(euler_tour(d), d)
    assert j == fixture("labeled3_gupcycle4")
    lin = glue_sequence([d.edge(k).payload for k in euler_tour(d).edge_ids], 2)
    with pytest.raises(AssemblyError, match="length condition"):
        cyclic_glue(lin, 3, allow_short=False)


def test_cyclic_glue_preconditions():
    with pytest.raises(AssemblyError, match="size condition"):
        s_cyclic_glue(graph(6), 3, 1)
    with pytest.raises(AssemblyError, match="self-overlap"):
        cyclic_glue(graph(6, [[1, 2]]), 3)
    with pytest.raises(AssemblyError, match="ends condition"):
        cyclic_glue(graph(8, [[1, 2], [7, 8], [2, 7]]), 3)
    with pytest.raises(AssemblyError, match="window condition"):
        cyclic_glue(graph(8, [[1, 4]]), 3)
    with pytest.raises(AssemblyError, match="linear"):
        cyclic_glue(graph(8, cyclic=True), 3)


def test_cycle_to_word_roundtrip(fixture):
    for name in ["labeled3_gucycle", "labeled3_gupcycle5", "labeled3_gupcycle7"]:
        j = fixture(name)
        w = cycle_to_word(j, 3)
        assert w.n == j.n + 2
        assert cyclic_glue(w, 3, allow_short=True) == j


@pytest.mark.parametrize("seed", range(10))
def test_perm_tour_cycle_roundtrip(seed):
    d = build_perm_digraph(4)
    order = list(range(len(d.edges)))
    random.Random(seed).shuffle(order)
    t = euler_tour(d, order=order)
    j = tour_to_cycle(t, d)
    assert j.n == 24
    assert tour_from_cycle(j, d) == t
