from math import comb, factorial

import pytest

from gucycles.euler import is_balanced, is_strongly_connected
from gucycles.families import canonical_form, iso_classes, labeled_copy_count, perm_graph
from gucycles.ordered_graph import from_mask, graph, window
from gucycles.overlap_digraph import (
    DigraphError,
    arc_digraph,
    build_clustered_graph,
    build_ffold_multigraph,
    build_perm_digraph,
    check_windows,
    clustered_matches_perm_digraph,
    compress_twins,
    ffold_factor,
    ffold_subgraph_balance,
    find_2tours,
    find_loops,
    find_twin,
    find_twin_edge_cycles,
    fully_compressed,
    perm_twin_pairs,
    twin_pairs,
)


def brute_loop_count(n):
    """Graphs on [n] (pair {1,n} ignored) whose two (n-1)-windows coincide."""
    count = set()
    for m in range(1 << comb(n, 2)):
        g = from_mask(m, n)
        if window(g, 1, n - 1) == window(g, 2, n - 1):
            count.add(frozenset(g.edges - {(1, n)}))
    return len(count)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_arc_digraph_shape(n):
    d = arc_digraph(n)
    assert len(d.vertices) == 2 ** comb(n - 1, 2)
    assert len(d.edges) == 2 ** comb(n, 2)
    assert is_balanced(d) and is_strongly_connected(d)
    check_windows(d)
    assert [e.origin for e in d.edges] == [(e.id,) for e in d.edges]


def test_arc_digraph_d3_edges():
    d = arc_digraph(3)
    e = d.edge(0b011)
    assert e.payload == graph(3, [[1, 2], [1, 3]])
    assert d.vertices[e.tail] == graph(2, [[1, 2]])
    assert d.vertices[e.head] == graph(2)


@pytest.mark.parametrize(
    "n,edges,loops,tours",
    [(3, 4, 2, 1), (4, 32, 4, 6), (5, 512, 8, 28)],
)
def test_compressed_counts(n, edges, loops, tours):
    d = fully_compressed(n)
    assert len(d.edges) == edges == 2 ** (comb(n, 2) - 1)
    assert len(find_loops(d)) == loops == 2 ** (n - 2) == brute_loop_count(n)
    assert len(find_2tours(d)) == tours == 2 ** (2 * n - 5) - 2 ** (n - 3)
    assert is_balanced(d) and is_strongly_connected(d)
    check_windows(d)


def test_compressed_edges_keep_both_origins():
    d = fully_compressed(4)
    far = (1, 4)
    for e in d.edges:
        a, b = e.origin
        assert far not in arc_digraph(4).edge(a).payload.edges
        assert far in arc_digraph(4).edge(b).payload.edges
        assert e.payload.diamond_groups == (frozenset([far]),)


def test_twins():
    d = arc_digraph(3)
    assert find_twin(d, 0) == 0b010
    assert len(twin_pairs(d)) == 4
    partial = compress_twins(d, twin_pairs(d)[:1])
    assert len(partial.edges) == 7
    assert is_balanced(partial)
    with pytest.raises(DigraphError):
        compress_twins(d, [(0, 1)])


@pytest.mark.parametrize("n,s,nv,ne", [(3, 2, 2, 6), (4, 2, 2, 24), (4, 3, 6, 24), (5, 2, 2, 120), (5, 3, 6, 120)])
def test_perm_digraph_shape(n, s, nv, ne):
    d = build_perm_digraph(n, s)
    assert (len(d.vertices), len(d.edges)) == (nv, ne) == (factorial(s), factorial(n))
    assert is_balanced(d) and is_strongly_connected(d)
    check_windows(d)
    o = build_clustered_graph(n, s)
    assert clustered_matches_perm_digraph(o, d)


def test_clustered_loops_n3():
    o = build_clustered_graph(3, 2)
    loops = sorted((o.edges[k].code, o.vertices[o.edges[k].tail]) for k in find_loops(o))
    assert loops == [((1, 2, 3), (1, 2)), ((3, 2, 1), (2, 1))]


def test_perm_digraph_edges_are_perm_graphs():
    d = build_perm_digraph(4, 3)
    for e in d.edges:
        assert e.payload == perm_graph(e.code)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_twin_edge_cycles(n):
    d = build_perm_digraph(n)
    cycles = find_twin_edge_cycles(d)
    assert len(cycles) == factorial(n - 2)
    assert all(len(c) == n - 1 for c in cycles)
    pairs = {p for c in cycles for p in c}
    assert pairs == set(perm_twin_pairs(d))
    for a, b in perm_twin_pairs(d):
        pa, pb = d.edge(a).code, d.edge(b).code
        assert pa[1:-1] == pb[1:-1] and abs(pa[0] - pa[-1]) == 1
    for c in cycles:
        for (a, _), (b, _) in zip(c, c[1:] + c[:1]):
            assert d.edge(a).head == d.edge(b).tail


@pytest.mark.parametrize("n,f,ne", [(3, 3, 12), (4, 12, 132)])
def test_ffold_multigraph(n, f, ne):
    assert ffold_factor(n) == f
    d, f2 = build_ffold_multigraph(n)
    assert f2 == f and len(d.edges) == ne == f * len(iso_classes(n))
    assert is_balanced(d) and is_strongly_connected(d)
    for c in iso_classes(n):
        assert ffold_subgraph_balance(d, c)
        copies = [e for e in d.edges if e.code[0] == c]
        assert len(copies) == f
        assert all(canonical_form(e.payload) == c for e in copies)
        assert len({e.origin[0] for e in copies}) == labeled_copy_count(c)
