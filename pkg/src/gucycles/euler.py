"""Euler tours on directed multigraphs.

The functions here only need an object exposing ``vertices`` (a sequence of
vertex codes, indexed by vertex id) and ``edges`` (a sequence of records with
``id``, ``tail`` and ``head``, edge ids dense from 0). :class:`Multidigraph` is
the minimal such container; overlap digraphs satisfy the same protocol.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence

from .families import guard


class NotEulerianError(ValueError):
    """The digraph (or edge subset) has no Euler tour."""


class TourError(ValueError):
    """A sequence of edges is not an Euler tour, or a target size is unreachable."""


@dataclass(frozen=True)
class Arc:
    id: int
    tail: int
    head: int


@dataclass(frozen=True)
class Multidigraph:
    vertices: tuple
    edges: tuple

    @classmethod
    def from_arcs(cls, n_vertices: int, arcs: Iterable[tuple[int, int]]) -> Multidigraph:
        return cls(tuple(range(n_vertices)), tuple(Arc(k, t, h) for k, (t, h) in enumerate(arcs)))


@dataclass(frozen=True)
class EulerTour:
    edge_ids: tuple
    start_vertex: int

    def __len__(self):
        return len(self.edge_ids)

    def to_json(self) -> dict:
        return {"edge_ids": list(self.edge_ids), "start_vertex": self.start_vertex}


def _subset(d, edge_ids) -> list:
    if edge_ids is None:
        return list(d.edges)
    keep = set(edge_ids)
    return [e for e in d.edges if e.id in keep]


def degrees(d, edge_ids=None) -> tuple[Counter, Counter]:
    out, inn = Counter(), Counter()
    for e in _subset(d, edge_ids):
        out[e.tail] += 1
        inn[e.head] += 1
    return out, inn


def is_balanced(d, edge_ids=None) -> bool:
    """In-degree equals out-degree at every vertex (optionally within an edge subset)."""
    out, inn = degrees(d, edge_ids)
    return out == inn


def _reach(adj: dict, src) -> set:
    seen = {src}
    stack = [src]
    while stack:
        v = stack.pop()
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_strongly_connected(d, edge_ids=None, ignore_isolated: bool = False) -> bool:
    """Forward and backward search from one vertex reach everything.

    With ``ignore_isolated`` only vertices touched by the (sub)set of edges count.
    """
    edges = _subset(d, edge_ids)
    if ignore_isolated:
        verts = {e.tail for e in edges} | {e.head for e in edges}
    else:
        verts = set(range(len(d.vertices)))
    if len(verts) <= 1:
        return True
    fwd, bwd = {}, {}
    for e in edges:
        fwd.setdefault(e.tail, []).append(e.head)
        bwd.setdefault(e.head, []).append(e.tail)
    root = min(verts)
    return _reach(fwd, root) >= verts and _reach(bwd, root) >= verts


def hierholzer(n_vertices: int, tails: Sequence[int], heads: Sequence[int], start: int, rank: Sequence[int] | None = None) -> list[int]:
    """Iterative Hierholzer on arrays; at each vertex the unused edge of lowest rank is taken first.

    Returns the circuit as a list of edge indices starting at ``start``. The
    caller is responsible for balance and connectivity.
    """
    m = len(tails)
    rank = list(range(m)) if rank is None else list(rank)
    out: list[list[int]] = [[] for _ in range(n_vertices)]
    for k in sorted(range(m), key=lambda k: rank[k], reverse=True):
        out[tails[k]].append(k)  # popped from the end, so lowest rank first
    stack_v = [start]
    stack_e: list[int] = []
    circuit: list[int] = []
    while stack_v:
        v = stack_v[-1]
        if out[v]:
            k = out[v].pop()
            stack_v.append(heads[k])
            stack_e.append(k)
        else:
            stack_v.pop()
            if stack_e:
                circuit.append(stack_e.pop())
    circuit.reverse()
    return circuit


def canonical_rotation(edge_ids: Sequence[int]) -> tuple:
    """Rotate so the smallest edge id comes first."""
    ids = list(edge_ids)
    if not ids:
        return ()
    k = ids.index(min(ids))
    return tuple(ids[k:] + ids[:k])


def euler_tour(d, edge_ids=None, order: Sequence[int] | None = None, start: int | None = None) -> EulerTour:
    """Deterministic Euler tour.

    Starts at the smallest vertex id with an out-edge (or ``start``) and always
    leaves a vertex by its smallest unused edge id. ``order`` optionally lists
    edge ids by priority instead; tests use it to produce varied tours. Only the
    edges in ``edge_ids`` are used when given.
    """
    edges = _subset(d, edge_ids)
    if not edges:
        raise NotEulerianError("no edges")
    if not is_balanced(d, [e.id for e in edges]):
        raise NotEulerianError("digraph is not balanced")
    if not is_strongly_connected(d, [e.id for e in edges], ignore_isolated=True):
        raise NotEulerianError("edges are not strongly connected")
    if order is not None:
        pri = {eid: k for k, eid in enumerate(order)}
        rank = [pri.get(e.id, len(pri) + e.id) for e in edges]
    else:
        rank = [e.id for e in edges]
    if start is None:
        start = min(e.tail for e in edges)
    circuit = hierholzer(len(d.vertices), [e.tail for e in edges], [e.head for e in edges], start, rank)
    ids = tuple(edges[k].id for k in circuit)
    return EulerTour(ids, start)


def validate_tour(d, tour: EulerTour, edge_ids=None) -> None:
    """Raise :class:`TourError` unless ``tour`` is a closed walk using each edge exactly once."""
    edges = {e.id: e for e in _subset(d, edge_ids)}
    ids = list(tour.edge_ids)
    if sorted(ids) != sorted(edges):
        raise TourError("tour does not use every edge exactly once")
    if edges[ids[0]].tail != tour.start_vertex:
        raise TourError("tour does not leave its start vertex")
    for a, b in zip(ids, ids[1:] + ids[:1]):
        if edges[a].head != edges[b].tail:
            raise TourError(f"edges {a} and {b} are not consecutive")


def _bareiss_det(mat: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [row[:] for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def arborescences(d, root: int, edge_ids=None) -> int:
    """Spanning arborescences oriented towards ``root`` (matrix-tree theorem)."""
    edges = _subset(d, edge_ids)
    verts = sorted({e.tail for e in edges} | {e.head for e in edges} | {root})
    idx = {v: k for k, v in enumerate(verts)}
    n = len(verts)
    lap = [[0] * n for _ in range(n)]
    for e in edges:
        t, h = idx[e.tail], idx[e.head]
        lap[t][t] += 1
        lap[t][h] -= 1  # loops cancel on the diagonal
    r = idx[root]
    minor = [[lap[i][j] for j in range(n) if j != r] for i in range(n) if i != r]
    return _bareiss_det(minor)


def count_euler_tours(d, edge_ids=None) -> int:
    """Number of Euler tours up to rotation, by the BEST theorem.

    Parallel edges are distinguishable. Equivalently this counts the tours that
    begin with one fixed edge.
    """
    edges = _subset(d, edge_ids)
    verts = {e.tail for e in edges} | {e.head for e in edges}
    guard(len(verts) <= 12, f"tour counting on {len(verts)} vertices > 12")
    ids = [e.id for e in edges]
    if not edges or not is_balanced(d, ids) or not is_strongly_connected(d, ids, ignore_isolated=True):
        raise NotEulerianError("digraph is not Eulerian")
    out, _ = degrees(d, ids)
    total = arborescences(d, min(verts), ids)
    for v in verts:
        total *= factorial(out[v] - 1)
    return total


def select_tour_collection(n: int, t: int, dstar=None) -> frozenset:
    """Edge ids of ``D_n*`` forming ``t`` edges of edge-disjoint loops and 2-cycles.

    Low range ``t <= 2^(2n-4)``: up to ``2^(n-2)`` loops alone, otherwise all
    or all-but-one loops plus enough 2-cycles to hit ``t``. High range: the
    complement of the low-range collection for ``|E| - t``. The result is always
    balanced.
    """
    from .overlap_digraph import find_2tours, find_loops, fully_compressed

    d = fully_compressed(n) if dstar is None else dstar
    total = len(d.edges)
    low = 1 << (2 * n - 4)
    if 0 <= t <= low:
        return frozenset(_low_collection(d, n, t, find_loops(d), find_2tours(d)))
    if total - low <= t <= total:
        rest = _low_collection(d, n, total - t, find_loops(d), find_2tours(d))
        return frozenset(e.id for e in d.edges) - frozenset(rest)
    raise TourError(f"t={t} outside achievable ranges [0,{low}] and [{total - low},{total}]")


def _low_collection(d, n: int, t: int, loops: list, tours: list) -> list:
    nloops = 1 << (n - 2)
    half = 1 << (n - 3) if n >= 3 else 0
    if t <= nloops:
        return loops[:t]
    if t % 2 == 0:
        k, nl = t // 2 - half, nloops
    else:
        k, nl = (t + 1) // 2 - half, nloops - 1
    if k > len(tours):
        raise TourError(f"need {k} two-tours, only {len(tours)} exist")
    chosen = list(loops[:nl])
    for a, b in tours[:k]:
        chosen += [a, b]
    return chosen
