"""Overlap multidigraphs.

Every digraph here has edges that are (partial) graphs on ``[n]`` (or, for the
clustered graph, permutations of ``[n]``) and vertices that are their
``s``-windows. An edge runs from its first ``s``-window to its last one.

* ``D_n`` (arc digraph): all labeled graphs on ``[n]``, ``s = n - 1``.
* ``D_n*``: ``D_n`` with every twin pair compressed into one partial graph.
* ``P_{n,s}``: permutation graphs on ``[n]`` over permutation graphs on ``[s]``.
* ``O(n,s)``: the same structure with permutations as payloads.
* the f-fold multigraph: ``D_n`` with edges repeated so every isomorphism
  class gets the same number of edge slots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, reduce as _fold
from itertools import permutations
from math import comb, factorial, lcm
from typing import Any, Iterable, Sequence

from .families import (
    IsoClassCode,
    class_of_mask,
    guard,
    labeled_copy_count,
    perm_graph,
    red,
)
from .ordered_graph import OrderedPartialGraph, from_mask, pair_bits, window

LABELED_KIND = "labeled"
PERM_KIND = "permutation"
CLUSTERED_KIND = "clustered"
FFOLD_KIND = "ffold"


class DigraphError(ValueError):
    """Invalid digraph request or structure."""


@dataclass(frozen=True)
class Edge:
    """A digraph edge. ``origin`` lists the arc-digraph edge ids it stands for."""

    id: int
    tail: int
    head: int
    payload: Any
    origin: tuple = ()
    code: Any = None


@dataclass(frozen=True)
class OverlapDigraph:
    n: int
    s: int
    kind: str
    vertices: tuple
    edges: tuple
    meta: dict = field(default_factory=dict, compare=False)

    def out_edges(self, v: int) -> list[Edge]:
        return [e for e in self.edges if e.tail == v]

    def edge(self, eid: int) -> Edge:
        e = self.edges[eid]
        assert e.id == eid
        return e

    def vertex_id(self, payload) -> int:
        return self._vindex()[_vkey(payload)]

    def _vindex(self) -> dict:
        idx = self.meta.get("_vindex")
        if idx is None:
            idx = {_vkey(v): k for k, v in enumerate(self.vertices)}
            self.meta["_vindex"] = idx
        return idx


def _vkey(payload):
    if isinstance(payload, OrderedPartialGraph):
        return ("g", payload.n, payload.edge_mask())
    return ("w", tuple(payload))


def _payload_key(p) -> tuple:
    if isinstance(p, OrderedPartialGraph):
        return p.sort_key()
    return (len(p), tuple(p))


def _graph_ends(p: OrderedPartialGraph, s: int) -> tuple[OrderedPartialGraph, OrderedPartialGraph]:
    return window(p, 1, s), window(p, p.n - s + 1, s)


def _assemble(n: int, s: int, kind: str, vertex_payloads: Iterable, items: Iterable[tuple], meta=None) -> OverlapDigraph:
    """Build a digraph from ``(payload, origin, code)`` triples; ids follow payload order."""
    verts = sorted(vertex_payloads, key=_payload_key)
    vidx = {_vkey(v): k for k, v in enumerate(verts)}
    items = sorted(items, key=lambda it: (_payload_key(it[0]), it[1]))
    edges = []
    for k, (payload, origin, code) in enumerate(items):
        if isinstance(payload, OrderedPartialGraph):
            a, b = _graph_ends(payload, s)
        else:
            a, b = red(payload[:s]), red(payload[-s:])
        edges.append(Edge(k, vidx[_vkey(a)], vidx[_vkey(b)], payload, origin, code))
    return OverlapDigraph(n, s, kind, tuple(verts), tuple(edges), dict(meta or {}))


def check_windows(d: OverlapDigraph) -> None:
    """Every edge's first and last ``s``-windows equal its tail and head payloads."""
    for e in d.edges:
        if isinstance(e.payload, OrderedPartialGraph):
            a, b = _graph_ends(e.payload, d.s)
        else:
            a, b = red(e.payload[: d.s]), red(e.payload[-d.s :])
        if _vkey(a) != _vkey(d.vertices[e.tail]) or _vkey(b) != _vkey(d.vertices[e.head]):
            raise DigraphError(f"edge {e.id} does not match its endpoints")


# ---- arc digraph and compression -------------------------------------------


def build_arc_digraph(n: int) -> OverlapDigraph:
    """``D_n``: vertices are graphs on ``[n-1]``, edges are graphs on ``[n]`` (id = bitmask)."""
    if n < 2:
        raise DigraphError("n must be at least 2")
    guard(n <= 6, f"arc digraph for n={n} > 6")
    verts = [from_mask(m, n - 1) for m in range(1 << comb(n - 1, 2))]
    items = [(from_mask(m, n), (m,), m) for m in range(1 << comb(n, 2))]
    return _assemble(n, n - 1, LABELED_KIND, verts, items)


@lru_cache(maxsize=None)
def arc_digraph(n: int) -> OverlapDigraph:
    return build_arc_digraph(n)


def _far_bit(n: int) -> int:
    return pair_bits(n)[(1, n)]


def find_twin(d: OverlapDigraph, eid: int) -> int:
    """The edge whose payload differs from edge ``eid`` only in the pair ``{1,n}``."""
    e = d.edge(eid)
    p = e.payload
    far = (1, d.n)
    if not isinstance(p, OrderedPartialGraph):
        raise DigraphError("twins are defined for graph payloads")
    if far in p.pair_group:
        raise DigraphError(f"edge {eid} already carries a diamond at {far}")
    target = p.edge_mask() ^ _far_bit(d.n)
    index = d.meta.get("_mask_index")
    if index is None:
        index = {}
        for f in d.edges:
            if isinstance(f.payload, OrderedPartialGraph) and not f.payload.diamond_groups:
                index[f.payload.edge_mask()] = f.id
        d.meta["_mask_index"] = index
    if target not in index:
        raise DigraphError(f"edge {eid} has no twin in this digraph")
    return index[target]


def twin_pairs(d: OverlapDigraph) -> list[tuple[int, int]]:
    """All twin pairs ``(e, f)`` with ``e < f`` among diamond-free edges."""
    out = []
    far = (1, d.n)
    for e in d.edges:
        if e.payload.diamond_groups or far in e.payload.edges:
            continue
        try:
            f = find_twin(d, e.id)
        except DigraphError:
            continue
        out.append((min(e.id, f), max(e.id, f)))
    return sorted(out)


def compressed_payload(p: OrderedPartialGraph) -> OrderedPartialGraph:
    """Drop the pair ``{1,n}`` from the edges and make it a singleton diamond group."""
    far = (1, p.n)
    return OrderedPartialGraph(p.n, p.edges - {far}, p.diamond_groups + (frozenset([far]),))


def compress_twins(d: OverlapDigraph, pairs: Iterable[Sequence[int]]) -> OverlapDigraph:
    """Replace each twin pair by one edge carrying the diamond ``{1,n}``; ids are reassigned."""
    pairs = [tuple(p) for p in pairs]
    used: set[int] = set()
    for a, b in pairs:
        if a == b or a in used or b in used:
            raise DigraphError(f"twin pairs overlap at {(a, b)}")
        used |= {a, b}
        ea, eb = d.edge(a), d.edge(b)
        if (ea.tail, ea.head) != (eb.tail, eb.head) or find_twin(d, a) != b:
            raise DigraphError(f"edges {a} and {b} are not twins")
    items = [(e.payload, e.origin, e.code) for e in d.edges if e.id not in used]
    for a, b in pairs:
        ea, eb = d.edge(a), d.edge(b)
        codes = (ea.code, eb.code)
        items.append((compressed_payload(ea.payload), tuple(sorted(ea.origin + eb.origin)), codes))
    meta = {"compressed": d.meta.get("compressed", 0) + len(pairs)}
    return _assemble(d.n, d.s, d.kind, d.vertices, items, meta)


def fully_compress(d: OverlapDigraph) -> OverlapDigraph:
    return compress_twins(d, twin_pairs(d))


@lru_cache(maxsize=None)
def fully_compressed(n: int) -> OverlapDigraph:
    """``D_n*``."""
    return fully_compress(arc_digraph(n))


def find_loops(d: OverlapDigraph) -> list[int]:
    """Edge ids of loops, i.e. edges whose first and last ``s``-windows agree."""
    return [e.id for e in d.edges if e.tail == e.head]


def find_2tours(d: OverlapDigraph) -> list[tuple[int, int]]:
    """Unordered pairs of non-loop edges ``u -> v``, ``v -> u``, sorted."""
    by_ends: dict[tuple[int, int], list[int]] = {}
    for e in d.edges:
        if e.tail != e.head:
            by_ends.setdefault((e.tail, e.head), []).append(e.id)
    out = []
    for (u, v), ids in by_ends.items():
        if u < v:
            for a in ids:
                for b in by_ends.get((v, u), ()):
                    out.append((min(a, b), max(a, b)))
    return sorted(out)


# ---- permutations ----------------------------------------------------------


def _check_perm_range(n: int, s: int) -> None:
    if n < 2 or not 1 <= s <= n - 1:
        raise DigraphError(f"need n >= 2 and 1 <= s <= n-1, got n={n}, s={s}")
    guard(n <= 7, f"permutation digraph for n={n} > 7")


def build_perm_digraph(n: int, s: int | None = None) -> OverlapDigraph:
    """``P_{n,s}``: edges are permutation graphs on ``[n]``, vertices those on ``[s]``.

    Each edge records its permutation as ``code``.
    """
    s = n - 1 if s is None else s
    _check_perm_range(n, s)
    verts = [perm_graph(p) for p in permutations(range(1, s + 1))]
    items = [(perm_graph(p), (), p) for p in permutations(range(1, n + 1))]
    d = _assemble(n, s, PERM_KIND, verts, items)
    # origin = own id, so compressed edges can report what they replaced
    edges = tuple(Edge(e.id, e.tail, e.head, e.payload, (e.id,), e.code) for e in d.edges)
    return OverlapDigraph(n, s, PERM_KIND, d.vertices, edges, {})


@lru_cache(maxsize=None)
def perm_digraph(n: int, s: int | None = None) -> OverlapDigraph:
    return build_perm_digraph(n, s)


def build_clustered_graph(n: int, s: int | None = None) -> OverlapDigraph:
    """``O(n,s)``: vertices ``S_s``, one edge per ``π`` in ``S_n`` from ``red(prefix)`` to ``red(suffix)``."""
    s = n - 1 if s is None else s
    _check_perm_range(n, s)
    verts = list(permutations(range(1, s + 1)))
    items = [(p, (), p) for p in permutations(range(1, n + 1))]
    return _assemble(n, s, CLUSTERED_KIND, verts, items)


def clustered_matches_perm_digraph(o: OverlapDigraph, p: OverlapDigraph) -> bool:
    """``perm_graph`` maps ``O(n,s)`` onto ``P_{n,s}`` edge by edge, preserving endpoints."""
    if (o.n, o.s) != (p.n, p.s) or len(o.edges) != len(p.edges) or len(o.vertices) != len(p.vertices):
        return False
    by_code = {e.code: e for e in p.edges}
    for e in o.edges:
        f = by_code.get(e.code)
        if f is None or f.payload != perm_graph(e.payload):
            return False
        if p.vertices[f.tail] != perm_graph(o.vertices[e.tail]):
            return False
        if p.vertices[f.head] != perm_graph(o.vertices[e.head]):
            return False
    return True


def perm_twin_pairs(d: OverlapDigraph) -> list[tuple[int, int]]:
    """Twin pairs of ``P_n``: permutations whose first and last values are adjacent integers."""
    if d.kind != PERM_KIND or d.s != d.n - 1:
        raise DigraphError("twin pairs are taken in P_n")
    return twin_pairs(d)


def find_twin_edge_cycles(d: OverlapDigraph) -> list[list[tuple[int, int]]]:
    """Partition the twin pairs of ``P_n`` into ``(n-2)!`` cycles of length ``n-1``.

    Each vertex of ``P_n`` is the tail of exactly one twin pair and the head
    of exactly one, so following pairs from tail to head closes up. Cycles
    are sorted by their smallest edge id and each starts at that pair.
    """
    n = d.n
    guard(n <= 6, f"twin cycles for n={n} > 6")
    pairs = perm_twin_pairs(d)
    out_pair: dict[int, tuple[int, int]] = {}
    for a, b in pairs:
        t = d.edge(a).tail
        if t in out_pair:
            raise DigraphError(f"vertex {t} has two outgoing twin pairs")
        out_pair[t] = (a, b)
    seen: set[int] = set()
    cycles = []
    for v in sorted(out_pair):
        if v in seen:
            continue
        cyc = []
        u = v
        while u not in seen:
            seen.add(u)
            pr = out_pair.get(u)
            if pr is None:
                raise DigraphError(f"vertex {u} has no outgoing twin pair")
            cyc.append(pr)
            u = d.edge(pr[0]).head
        if u != v:
            raise DigraphError("twin pairs do not form disjoint cycles")
        k = cyc.index(min(cyc))
        cycles.append(cyc[k:] + cyc[:k])
    cycles.sort(key=lambda c: c[0])
    if len(cycles) != factorial(n - 2) or any(len(c) != n - 1 for c in cycles):
        raise DigraphError(f"expected {factorial(n - 2)} cycles of length {n - 1}, found {[len(c) for c in cycles]}")
    return cycles


# ---- f-fold multigraph -----------------------------------------------------


def ffold_factor(n: int) -> int:
    """Least common multiple of the labeled copy counts over isomorphism classes of ``[n]``."""
    from .families import iso_classes

    return _fold(lcm, (labeled_copy_count(c) for c in iso_classes(n)), 1)


def build_ffold_multigraph(n: int) -> tuple[OverlapDigraph, int]:
    """``D_n`` with ``f / f_G`` parallel copies of each labeled graph in class ``G``.

    Edge codes are ``(IsoClassCode, copy index)``; origins point back to ``D_n`` ids.
    """
    guard(n <= 5, f"f-fold multigraph for n={n} > 5")
    f = ffold_factor(n)
    base = arc_digraph(n)
    items = []
    for e in base.edges:
        c = IsoClassCode(n, class_of_mask(n, e.code))
        for k in range(f // labeled_copy_count(c)):
            items.append((e.payload, (e.id, k), (c, k)))
    d = _assemble(n, n - 1, FFOLD_KIND, base.vertices, items, {"f": f})
    return d, f


def ffold_subgraph_balance(d: OverlapDigraph, c: IsoClassCode) -> bool:
    """Edges of ``D_n`` whose payload lies in class ``c`` form a balanced subgraph."""
    from .euler import is_balanced

    ids = [e.id for e in d.edges if class_of_mask(d.n, e.payload.edge_mask()) == c.canon]
    return is_balanced(d, ids)

