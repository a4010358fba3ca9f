"""Acceptance criteria 1 to 13, each with its time budget.

Every test records one ``criterion N: PASS|FAIL`` line, printed inline and
again in the terminal summary.
"""

import random
import time
from contextlib import contextmanager
from itertools import permutations

from conftest import ACCEPTANCE, random_joined
from gucycles.assembly import check_restoration, glue, tour_from_cycle, tour_to_cycle
from gucycles.constructions import (
    ffold_gucycle,
    labeled_gucycle,
    labeled_gupcycle,
    perm_gucycle,
    perm_gucycle_direct,
    perm_gupcycle,
    sgocycle,
    threshold_gucycle_from_db,
    threshold_gupword_from_upword,
)
from gucycles.euler import Multidigraph, count_euler_tours, euler_tour, is_balanced
from gucycles.families import FamilyDescriptor, canonical_form, iso_classes, perm_graph, red
from gucycles.io import load_fixture
from gucycles.ordered_graph import overlaps_by, window
from gucycles.overlap_digraph import (
    arc_digraph,
    build_ffold_multigraph,
    ffold_subgraph_balance,
    find_2tours,
    find_loops,
    fully_compressed,
    perm_digraph,
)
from gucycles.verify import verify_graph_cover, window_members
from gucycles.words import (
    PartialWord,
    de_bruijn_count,
    de_bruijn_graph,
    enumerate_de_bruijn,
    numeric_word,
    perm_windows,
    upword_diamond,
    verify_perm_ucycle,
)


@contextmanager
def criterion(num, what, budget):
    t0 = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - t0
        assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - t0
        line = f"criterion {num}: {status} ({elapsed:.2f}s, budget {budget}s) {what}"
        ACCEPTANCE.append(line)
        print(line)


def exact(g, kind, n, s=None, f=1):
    rep = verify_graph_cover(g, FamilyDescriptor(kind, n, s, f))
    assert rep.exact, rep.summary()
    return rep


def test_criterion_01_labeled_gucycle():
    with criterion(1, "labeled gucycle n=3 from a tour of D_3, plus fixture", 1):
        j = labeled_gucycle(3)
        assert j.n == 8
        rep = exact(j, "labeled", 3)
        assert len(rep.hits) == 8
        exact(load_fixture("labeled3_gucycle")[0], "labeled", 3)


def test_criterion_02_gupcycle_lengths():
    with criterion(2, "gupcycles of every length 4..8 (n=3) and 32..64 (n=4)", 10):
        for n, lengths in [(3, range(4, 9)), (4, range(32, 65))]:
            for length in lengths:
                g = labeled_gupcycle(n, length)
                assert g.n == length
                rep = exact(g, "labeled", n)
                assert set(rep.counts().values()) == {1}


def test_criterion_03_loops_and_two_tours():
    with criterion(3, "loops 2^(n-2) and 2-tours 2^(2n-5)-2^(n-3) in D_n*, n=3..6", 5):
        for n in range(3, 7):
            d = fully_compressed(n)
            assert len(find_loops(d)) == 2 ** (n - 2)
            assert len(find_2tours(d)) == 2 ** (2 * n - 5) - 2 ** (n - 3)


def test_criterion_04_de_bruijn_counts():
    with criterion(4, "De Bruijn cycles enumerated, by formula and by BEST", 5):
        for a, n, expected in [(2, 2, 1), (2, 3, 2), (2, 4, 16)]:
            assert len(enumerate_de_bruijn(a, n)) == de_bruijn_count(a, n) == expected
            verts, tails, heads, _ = de_bruijn_graph(a, n)
            assert count_euler_tours(Multidigraph.from_arcs(len(verts), zip(tails, heads))) == expected


def _rotations_differ(a, b):
    return all(window(a, k, a.n) != window(b, 1, b.n) for k in range(1, a.n + 1))


def test_criterion_05_threshold_gucycles():
    with criterion(5, "threshold gucycles from all De Bruijn cycles, n=4,5, injective", 5):
        for n in (4, 5):
            outs = [threshold_gucycle_from_db(w, n) for w in enumerate_de_bruijn(2, n - 1)]
            assert len(outs) == 2 ** (2 ** (n - 2) - (n - 1))
            for g in outs:
                exact(g, "threshold", n)
            for i in range(len(outs)):
                for k in range(i + 1, len(outs)):
                    assert _rotations_differ(outs[i], outs[k])


def test_criterion_06_threshold_gupwords():
    with criterion(6, "threshold gupwords for n=3..10 and two fixtures", 5):
        for n in range(3, 11):
            rep = exact(threshold_gupword_from_upword(upword_diamond(n - 1), n), "threshold", n)
            assert len(rep.hits) == 2 ** (n - 1)
        for name in ("threshold5_gupword_one_group", "threshold5_gupword_three_groups"):
            exact(load_fixture(name)[0], "threshold", 5)


def test_criterion_07_permutation_bijection():
    with criterion(7, "permutation gucycles keep the word's order; 50 tour round trips in P_4", 10):
        orders = {
            "124324": [(1, 2, 3), (1, 3, 2), (3, 2, 1), (2, 1, 3), (2, 3, 1), (3, 1, 2)],
            "256413": [(1, 2, 3), (2, 3, 1), (3, 2, 1), (3, 1, 2), (1, 3, 2), (2, 1, 3)],
        }
        for word, order in orders.items():
            w = [int(c) for c in word]
            g = perm_gucycle(3, w)
            assert g == perm_gucycle_direct(w, 3)
            exact(g, "permutation", 3)
            assert perm_windows(w, 3) == order
            assert [m[0] for m in window_members(g, FamilyDescriptor("permutation", 3))] == order
        d = perm_digraph(4)
        rng = random.Random(2024)
        for _ in range(50):
            ranks = list(range(len(d.edges)))
            rng.shuffle(ranks)
            t = euler_tour(d, order=ranks)
            assert tour_from_cycle(tour_to_cycle(t, d), d) == t


def test_criterion_08_permutation_gupcycles():
    with criterion(8, "permutation gupcycles of lengths 24, 21, 18 and fixture", 5):
        for i, length in [(0, 24), (1, 21), (2, 18)]:
            g = perm_gupcycle(4, i)
            assert g.n == length
            exact(g, "permutation", 4)
            dists = {min(b - a, g.n - (b - a)) for grp in g.diamond_groups for a, b in grp}
            assert dists <= {3} and len(g.diamond_groups) == 3 * i
        exact(load_fixture("perm4_gupcycle18")[0], "permutation", 4)


def test_criterion_09_s_overlap():
    with criterion(9, "48-symbol 2-overlap word, its 2-gocycle, and a 2-gocycle for n=5", 120):
        word = load_fixture("perm4_2gocycle_ends")[1]["word"]
        w = numeric_word(PartialWord.parse(word, cyclic=True))
        assert len(w) == 48
        assert verify_perm_ucycle(w, 4, 2).exact
        exact(sgocycle(4, 2, w), "permutation", 4, 2)
        d = perm_digraph(5, 2)
        j = sgocycle(5, 2, euler_tour(d))
        assert j.n == 360
        exact(j, "permutation", 5, 2)


def test_criterion_10_overlap_equivalence():
    with criterion(10, "word overlap iff graph overlap on all of S_4 x S_4, s=1,2,3", 5):
        ps = list(permutations(range(1, 5)))
        graphs = {p: perm_graph(p) for p in ps}
        for s in (1, 2, 3):
            for a in ps:
                for b in ps:
                    words = red(a[-s:]) == red(b[:s])
                    assert words == overlaps_by(graphs[a], graphs[b], s)


def test_criterion_11_ffold():
    with criterion(11, "f-fold gucycles n=3 (f=3, 12 vertices) and n=4, with class balance", 10):
        g, f = ffold_gucycle(3)
        assert (f, g.n) == (3, 12)
        rep = exact(g, "unlabeled", 3, f=3)
        assert len(rep.hits) == 4 and set(rep.counts().values()) == {3}
        g4, f4 = ffold_gucycle(4)
        rep = exact(g4, "unlabeled", 4, f=f4)
        assert len(rep.hits) == 11 and set(rep.counts().values()) == {f4}
        for n in (3, 4):
            d = arc_digraph(n)
            for c in iso_classes(n):
                ids = [e.id for e in d.edges if canonical_form(e.payload) == c]
                assert is_balanced(d, ids)
            m, _ = build_ffold_multigraph(n)
            assert all(ffold_subgraph_balance(m, c) for c in iso_classes(n))


def test_criterion_12_unlabeled_fixtures():
    with criterion(12, "unlabeled guword (4), gucycle (34), gupword (11) fixtures", 5):
        for name, n, classes in [("unlabeled3_guword", 3, 4), ("unlabeled5_gucycle", 5, 34), ("unlabeled4_gupword", 4, 11)]:
            rep = exact(load_fixture(name)[0], "unlabeled", n)
            assert len(rep.hits) == classes


def test_criterion_13_glue_restoration():
    with criterion(13, "gluing restores both pieces on 1000 random overlapping pairs", 30):
        rng = random.Random(13)
        for _ in range(1000):
            m, n = rng.randint(2, 7), rng.randint(2, 7)
            s = rng.randint(1, min(m, n) - 1)
            x = random_joined(rng, m, n, s)
            g, h = window(x, 1, m), window(x, m - s + 1, n)
            j = glue(g, h, s)
            assert j == x
            assert check_restoration(g, h, s, j)
