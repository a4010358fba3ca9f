"""End-to-end constructions of universal (partial) cycles for graph families."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, gcd
from typing import Sequence

from .assembly import AssemblyError, tour_from_cycle, tour_to_cycle
from .euler import EulerTour, euler_tour, select_tour_collection, validate_tour
from .families import red
from .ordered_graph import OrderedPartialGraph
from .overlap_digraph import (
    arc_digraph,
    build_ffold_multigraph,
    compress_twins,
    find_twin_edge_cycles,
    fully_compressed,
    perm_digraph,
)
from .words import Diamond, PartialWord, int_word, verify_perm_ucycle, verify_upword


class ConstructionError(ValueError):
    """Invalid input to a construction."""


# ---- labeled graphs --------------------------------------------------------


def labeled_length_ranges(n: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """The two intervals of achievable gupcycle lengths for labeled graphs on ``[n]``."""
    total = 1 << comb(n, 2)
    half = total // 2
    band = 1 << (2 * n - 4)
    return (half, half + band), (total - band, total)


def labeled_gupcycle(n: int, length: int) -> OrderedPartialGraph:
    """Gupcycle for labeled graphs on ``[n]`` with ``length`` vertices.

    Compresses ``2^C(n,2) - length`` twin pairs of ``D_n`` chosen as a balanced
    set of loops and 2-cycles of ``D_n*``, then closes an Euler tour.
    """
    if n < 3:
        raise ConstructionError("n must be at least 3")
    (a, b), (c, e) = labeled_length_ranges(n)
    if not (a <= length <= b or c <= length <= e):
        raise ConstructionError(f"length {length} outside achievable ranges [{a},{b}] and [{c},{e}]")
    t = (1 << comb(n, 2)) - length
    dstar = fully_compressed(n)
    chosen = select_tour_collection(n, t, dstar)
    pairs = [dstar.edge(k).origin for k in sorted(chosen)]
    d = compress_twins(arc_digraph(n), pairs)
    return tour_to_cycle(euler_tour(d), d)


def labeled_gucycle(n: int, tour: EulerTour | None = None) -> OrderedPartialGraph:
    d = arc_digraph(n)
    return tour_to_cycle(euler_tour(d) if tour is None else tour, d)


# ---- threshold graphs ------------------------------------------------------


def _binary(w: PartialWord) -> None:
    if set(w.alphabet) != {"0", "1"}:
        raise ConstructionError("threshold constructions need a binary word")


def threshold_gucycle_from_db(w: PartialWord, n: int) -> OrderedPartialGraph:
    """Cyclic graph on ``2^(n-1)`` vertices: vertex ``i`` dominates its ``n-1`` predecessors iff ``w_i = 1``."""
    _binary(w)
    if n < 4:
        raise ConstructionError("n must be at least 4")
    if not w.cyclic or w.diamond_positions or len(w) != 1 << (n - 1) or not verify_upword(w, n - 1).exact:
        raise ConstructionError("input is not a De Bruijn cycle for words of length n-1")
    return _threshold_cycle(w, n)


def _threshold_cycle(w: PartialWord, n: int) -> OrderedPartialGraph:
    size = len(w)
    edges = set()
    groups = []
    for i in range(1, size + 1):
        tok = w.tokens[i - 1]
        ps = [((j - 1) % size + 1, i) for j in range(i - (n - 1), i)]
        ps = [(min(p), max(p)) for p in ps]
        if isinstance(tok, Diamond):
            groups.append(frozenset(ps))
        elif tok == "1":
            edges.update(ps)
    return OrderedPartialGraph(size, frozenset(edges), tuple(groups), cyclic=True)


def threshold_gupword_from_upword(w: PartialWord, n: int) -> OrderedPartialGraph:
    """Linear partial graph on ``|w| + 1`` vertices from an upword for binary words of length ``n-1``.

    Vertex ``i`` (0-based) joins its ``n-1`` predecessors as edges when
    ``w_i = 1`` and as one diamond group when ``w_i`` is a diamond.
    """
    _binary(w)
    if w.cyclic:
        raise ConstructionError("use threshold_gupcycle_from_upcycle for cyclic words")
    if any(isinstance(t, Diamond) and not t.unrestricted for t in w.tokens):
        raise ConstructionError("restricted diamonds are not binary upword symbols")
    if not verify_upword(w, n - 1).exact:
        raise ConstructionError("input is not an upword for words of length n-1")
    edges = set()
    groups = []
    for i, tok in enumerate(w.tokens, start=1):
        ps = [(j, i + 1) for j in range(max(1, i - n + 2), i + 1)]
        if isinstance(tok, Diamond):
            groups.append(frozenset(ps))
        elif tok == "1":
            edges.update(ps)
    return OrderedPartialGraph(len(w) + 1, frozenset(edges), tuple(groups))


def threshold_gupcycle_from_upcycle(w: PartialWord, n: int) -> OrderedPartialGraph:
    """Cyclic analogue of :func:`threshold_gupword_from_upword`; needs ``|w| > 2(n-1)``."""
    _binary(w)
    if not w.cyclic:
        raise ConstructionError("input must be cyclic")
    if len(w) <= 2 * (n - 1):
        raise ConstructionError(f"length condition: |w| = {len(w)} <= 2(n-1) = {2 * (n - 1)}")
    if not verify_upword(w, n - 1).exact:
        raise ConstructionError("input is not an upcycle for words of length n-1")
    return _threshold_cycle(w, n)


# ---- permutation graphs ----------------------------------------------------


def perm_tour_from_word(w: Sequence[int], n: int, s: int | None = None) -> tuple[EulerTour, object]:
    """Euler tour of ``P_{n,s}`` read off the qualifying windows of a cyclic word."""
    s = n - 1 if s is None else s
    word = w if isinstance(w, PartialWord) else int_word(w, cyclic=True)
    rep = verify_perm_ucycle(word, n, s)
    if not rep.exact:
        raise ConstructionError(f"word is not an {s}-overlap cycle for S_{n}: {rep.summary()}")
    d = perm_digraph(n, s)
    by_perm = {e.code: e.id for e in d.edges}
    ids = []
    for pos in range(1, len(word) + 1, n - s):
        ids.append(by_perm[red(word.window(pos, n))])
    tour = EulerTour(tuple(ids), d.edge(ids[0]).tail)
    validate_tour(d, tour)
    return tour, d


def perm_gucycle(n: int, source=None) -> OrderedPartialGraph:
    """Gucycle for permutation graphs on ``[n]`` with ``n!`` vertices.

    ``source`` is an Euler tour of ``P_n``, a universal cycle for permutations
    (integer sequence or cyclic word), or ``None`` for the deterministic tour.
    Windows appear in the source's order.
    """
    return sgocycle(n, n - 1, source)


def perm_gucycle_direct(w: Sequence[int], n: int, s: int | None = None) -> OrderedPartialGraph:
    """Direct formula: ``p`` and a later position ``q`` in a common qualifying window are joined iff ``w_p > w_q``."""
    s = n - 1 if s is None else s
    vals = list(w)
    size = len(vals)
    edges = set()
    for start in range(0, size, n - s):
        for a in range(n):
            for b in range(a + 1, n):
                p, q = (start + a) % size, (start + b) % size
                if vals[p] > vals[q]:
                    edges.add((min(p, q) + 1, max(p, q) + 1))
    return OrderedPartialGraph(size, frozenset(edges), (), cyclic=True)


def perm_tour_of_cycle(j: OrderedPartialGraph, n: int, s: int | None = None) -> EulerTour:
    """Inverse of :func:`perm_gucycle` / :func:`sgocycle` on the tour side."""
    return tour_from_cycle(j, perm_digraph(n, n - 1 if s is None else s))


def uword_from_tour(tour: EulerTour, d) -> tuple[tuple[int, ...], bool]:
    """Universal word for ``S_n`` following a tour of ``P_n``, and whether it closes into a cycle.

    Each step inserts a new value at the rank demanded by the next edge,
    using exact fractions between neighbours. The values are then relabeled to
    consecutive integers. The flag reports whether the first ``n!`` letters
    already form a universal cycle.
    """
    n = d.n
    if d.s != n - 1:
        raise ConstructionError("word extraction is defined for P_n")
    perms = [d.edge(k).code for k in tour.edge_ids]
    vals: list[Fraction] = [Fraction(v) for v in perms[0]]
    for p in perms[1:]:
        tail = vals[-(n - 1) :]
        ordered = sorted(tail)
        r = p[-1]
        if r == 1:
            x = ordered[0] - 1
        elif r == n:
            x = ordered[-1] + 1
        else:
            x = (ordered[r - 2] + ordered[r - 1]) / 2
        vals.append(x)
    rank = {v: k + 1 for k, v in enumerate(sorted(set(vals)))}
    word = tuple(rank[v] for v in vals)
    head = word[: factorial(n)]
    closed = False
    if all(len(set(head[(k + t) % len(head)] for t in range(n))) == n for k in range(len(head))):
        closed = verify_perm_ucycle(int_word(head, cyclic=True), n).exact
    return word, closed


def perm_gupcycle(n: int, i: int) -> OrderedPartialGraph:
    """Gupcycle for permutation graphs on ``[n]`` with ``n! - i(n-1)`` vertices.

    Compresses the first ``i`` twin-edge cycles of ``P_n`` (ordered by their
    smallest edge id), so every diamond sits at index distance ``n-1``.
    """
    d = perm_digraph(n)
    cycles = find_twin_edge_cycles(d)
    if not 0 <= i <= len(cycles):
        raise ConstructionError(f"i={i} not in [0, {len(cycles)}]")
    pairs = [pr for cyc in cycles[:i] for pr in cyc]
    dc = compress_twins(d, pairs)
    return tour_to_cycle(euler_tour(dc), dc)


def sgocycle_exists(n: int, s: int) -> bool:
    return 1 <= s < n / 2 or gcd(s, n) == 1


def sgocycle(n: int, s: int, source=None) -> OrderedPartialGraph:
    """Cyclic graph on ``n!(n-s)`` vertices whose windows at ``1 + i(n-s)`` cover each permutation graph once."""
    d = perm_digraph(n, s)
    if source is None:
        if not sgocycle_exists(n, s):
            raise ConstructionError(f"no Euler tour is guaranteed for n={n}, s={s}")
        tour = euler_tour(d)
    elif isinstance(source, EulerTour):
        tour = source
        validate_tour(d, tour)
    else:
        tour, _ = perm_tour_from_word(source, n, s)
    try:
        return tour_to_cycle(tour, d)
    except AssemblyError as exc:
        raise ConstructionError(str(exc)) from exc


# ---- unlabeled, f-fold -----------------------------------------------------


def ffold_gucycle(n: int) -> tuple[OrderedPartialGraph, int]:
    """Cyclic graph covering each isomorphism class on ``n`` vertices exactly ``f`` times."""
    m, f = build_ffold_multigraph(n)
    return tour_to_cycle(euler_tour(m), m), f
