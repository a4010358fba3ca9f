"""Ordered and cyclically ordered partial graphs.

Vertices are always ``1..n``. Pairs are stored as ``(i, j)`` with ``i < j``.
A graph carries plain edges plus a list of *diamond groups*: disjoint sets of
pairs that are jointly present or jointly absent. A graph whose groups are
all singletons is an ordinary partial graph; a graph with no groups is an
ordinary ordered graph.

Labeled graphs on ``[n]`` are also handled as integer bitmasks over the pairs
``{1,2}, {1,3}, ..., {n-1,n}`` in lexicographic order (bit 0 is ``{1,2}``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Sequence, Union

Pair = tuple[int, int]


class GraphError(ValueError):
    """Malformed graph data."""


class WindowError(GraphError):
    """A window does not fit in its host graph."""


class OverlapError(GraphError):
    """Two graphs do not overlap as required."""


def canon_pair(i: int, j: int) -> Pair:
    if i == j:
        raise GraphError(f"self-pair {{{i},{j}}}")
    return (i, j) if i < j else (j, i)


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple[Pair, ...]:
    """All pairs of ``[n]`` in lexicographic order."""
    return tuple(combinations(range(1, n + 1), 2))


@lru_cache(maxsize=None)
def pair_bits(n: int) -> dict[Pair, int]:
    return {p: 1 << k for k, p in enumerate(pairs(n))}


def pair_mask(ps: Iterable[Pair], n: int) -> int:
    bits = pair_bits(n)
    m = 0
    for p in ps:
        m |= bits[p]
    return m


def mask_pairs(mask: int, n: int) -> list[Pair]:
    return [p for k, p in enumerate(pairs(n)) if mask >> k & 1]


@dataclass(frozen=True, eq=False)
class OrderedPartialGraph:
    """A (cyclically) ordered partial graph on ``[n]``.

    ``diamond_groups`` keeps construction order so that window provenance can
    refer to group indices; equality treats the groups as a set of sets.
    """

    n: int
    edges: frozenset = frozenset()
    diamond_groups: tuple = ()
    cyclic: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"n must be positive, got {self.n}")
        edges = frozenset(canon_pair(*p) for p in self.edges)
        groups = tuple(frozenset(canon_pair(*p) for p in grp) for grp in self.diamond_groups)
        seen = set(edges)
        for grp in groups:
            if not grp:
                raise GraphError("empty diamond group")
            if seen & grp:
                raise GraphError(f"pair(s) {sorted(seen & grp)} appear twice")
            seen |= grp
        for i, j in seen:
            if not (1 <= i < j <= self.n):
                raise GraphError(f"pair {{{i},{j}}} outside [1,{self.n}]")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "diamond_groups", groups)

    def _key(self):
        return (self.n, self.cyclic, self.edges, frozenset(self.diamond_groups))

    def __eq__(self, other):
        if not isinstance(other, OrderedPartialGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        kind = "cyclic" if self.cyclic else "linear"
        body = f"n={self.n}, {kind}, edges={sorted(self.edges)}"
        if self.diamond_groups:
            body += f", diamonds={[sorted(g) for g in self.diamond_groups]}"
        return f"OrderedPartialGraph({body})"

    @cached_property
    def pair_group(self) -> dict[Pair, int]:
        """Map each diamond pair to the index of its group."""
        return {p: k for k, grp in enumerate(self.diamond_groups) for p in grp}

    @property
    def diamond_pairs(self) -> frozenset:
        return frozenset(self.pair_group)

    @property
    def is_partial(self) -> bool:
        return bool(self.diamond_groups)

    def edge_mask(self) -> int:
        return pair_mask(self.edges, self.n)

    def diamond_mask(self) -> int:
        return pair_mask(self.pair_group, self.n)

    def sort_key(self) -> tuple:
        """Deterministic ordering: edge bitmask first, then diamond groups."""
        return (self.n, self.edge_mask(), tuple(sorted(pair_mask(g, self.n) for g in self.diamond_groups)))

    def linear(self) -> OrderedPartialGraph:
        if not self.cyclic:
            return self
        return OrderedPartialGraph(self.n, self.edges, self.diamond_groups, cyclic=False)

    def as_cyclic(self) -> OrderedPartialGraph:
        return OrderedPartialGraph(self.n, self.edges, self.diamond_groups, cyclic=True)

    def distance(self, i: int, j: int) -> int:
        """Index distance; the shorter way round for cyclic graphs."""
        d = abs(j - i)
        return min(d, self.n - d) if self.cyclic else d


def from_mask(mask: int, n: int, diamond_mask: int = 0, cyclic: bool = False) -> OrderedPartialGraph:
    """Graph on ``[n]`` from an edge bitmask; each set bit of ``diamond_mask`` is a singleton group."""
    return OrderedPartialGraph(
        n,
        frozenset(mask_pairs(mask, n)),
        tuple(frozenset([p]) for p in mask_pairs(diamond_mask, n)),
        cyclic,
    )


def graph(n: int, edges: Iterable[Sequence[int]] = (), diamonds: Iterable[Iterable[Sequence[int]]] = (), cyclic: bool = False) -> OrderedPartialGraph:
    """Convenience constructor taking plain lists, e.g. ``graph(3, [[1, 2]], [[[1, 3]]])``."""
    return OrderedPartialGraph(
        n,
        frozenset(tuple(e) for e in edges),
        tuple(frozenset(tuple(p) for p in grp) for grp in diamonds),
        cyclic,
    )


def reduce(
    g: Union[OrderedPartialGraph, Sequence[int]],
    edges: Iterable[Sequence[int]] = (),
    diamond_groups: Iterable[Iterable[Sequence[int]]] = (),
) -> OrderedPartialGraph:
    """Relabel an ordered graph onto ``[N]`` preserving the vertex order.

    Either pass an :class:`OrderedPartialGraph` (returned as a linear graph) or
    a sequence of totally ordered vertex labels followed by edges and groups
    written over those labels.
    """
    if isinstance(g, OrderedPartialGraph):
        return g.linear()
    verts = sorted(g)
    if len(set(verts)) != len(verts):
        raise GraphError("repeated vertex label")
    rank = {v: k + 1 for k, v in enumerate(verts)}

    def rel(p):
        return canon_pair(rank[p[0]], rank[p[1]])

    return OrderedPartialGraph(
        len(verts),
        frozenset(rel(p) for p in edges),
        tuple(frozenset(rel(p) for p in grp) for grp in diamond_groups),
    )


def ordered_iso(g: OrderedPartialGraph, h: OrderedPartialGraph) -> bool:
    """Isomorphic as ordered (partial) graphs."""
    return reduce(g) == reduce(h)


@dataclass(frozen=True)
class WindowRef:
    start: int
    length: int
    wraps: bool = False


def window_vertices(g: OrderedPartialGraph, start: int, length: int) -> list[int]:
    if length < 1 or length > g.n:
        raise WindowError(f"window length {length} invalid for {g.n} vertices")
    if not 1 <= start <= g.n:
        raise WindowError(f"window start {start} outside [1,{g.n}]")
    if g.cyclic:
        return [(start - 1 + t) % g.n + 1 for t in range(length)]
    if start + length - 1 > g.n:
        raise WindowError(f"window [{start}..{start + length - 1}] exceeds linear host of {g.n} vertices")
    return list(range(start, start + length))


def _window_parts(g: OrderedPartialGraph, start: int, length: int):
    """Edges and restricted groups (keyed by host group index) of a window, relabeled to ``[length]``."""
    verts = window_vertices(g, start, length)
    edges = []
    groups: dict[int, list[Pair]] = {}
    host_edges = g.edges
    pg = g.pair_group
    for a in range(length):
        va = verts[a]
        for b in range(a + 1, length):
            p = canon_pair(va, verts[b])
            if p in host_edges:
                edges.append((a + 1, b + 1))
            else:
                k = pg.get(p)
                if k is not None:
                    groups.setdefault(k, []).append((a + 1, b + 1))
    return edges, groups


def window_with_groups(g: OrderedPartialGraph, start: int, length: int) -> tuple[OrderedPartialGraph, tuple[int, ...]]:
    """Window plus, for each of its diamond groups, the index of the originating host group."""
    edges, groups = _window_parts(g, start, length)
    order = sorted(groups)
    w = OrderedPartialGraph(length, frozenset(edges), tuple(frozenset(groups[k]) for k in order))
    return w, tuple(order)


def window(g: OrderedPartialGraph, start: Union[int, WindowRef], length: int | None = None) -> OrderedPartialGraph:
    """Induced ordered partial graph on consecutive vertices, reduced to ``[length]``."""
    if isinstance(start, WindowRef):
        ref = start
        if ref.wraps and not g.cyclic:
            raise WindowError("wrapping window on a linear host")
        start, length = ref.start, ref.length
    if length is None:
        raise WindowError("window length required")
    return window_with_groups(g, start, length)[0]


def window_realizations(g: OrderedPartialGraph, start: int, length: int) -> list[tuple[int, int]]:
    """``(selection, edge_mask)`` for every distinct realization of a window.

    ``selection`` is a bitmask over *host* group indices. Only groups with a
    pair inside the window are varied; duplicates keep the smallest selection.
    """
    edges, groups = _window_parts(g, start, length)
    bits = pair_bits(length)
    base = 0
    for p in edges:
        base |= bits[p]
    keys = sorted(groups)
    gmasks = [sum(bits[p] for p in groups[k]) for k in keys]
    out: dict[int, int] = {}
    for sub in range(1 << len(keys)):
        m = base
        sel = 0
        for t in range(len(keys)):
            if sub >> t & 1:
                m |= gmasks[t]
                sel |= 1 << keys[t]
        if m not in out:
            out[m] = sel
    return [(sel, m) for m, sel in out.items()]


def realizations(g: OrderedPartialGraph, start: Union[int, WindowRef], length: int | None = None) -> set[OrderedPartialGraph]:
    """All ordered graphs a window can stand for, over every choice of its diamond groups."""
    if isinstance(start, WindowRef):
        start, length = start.start, start.length
    return {from_mask(m, length) for _, m in window_realizations(g, start, length)}


def overlaps_by(g: OrderedPartialGraph, h: OrderedPartialGraph, s: int) -> bool:
    """True iff the last ``s`` vertices of ``g`` and the first ``s`` of ``h`` agree as ordered partial graphs."""
    if g.cyclic or h.cyclic:
        raise OverlapError("overlaps_by needs linear graphs")
    if not 1 <= s <= min(g.n, h.n) - 1:
        raise OverlapError(f"overlap {s} out of range for sizes {g.n}, {h.n}")
    return ordered_iso(window(g, g.n - s + 1, s), window(h, 1, s))


def max_pair_distance(g: OrderedPartialGraph) -> int:
    """Largest index distance over edges and diamond pairs (0 if none)."""
    ps = list(g.edges) + list(g.pair_group)
    return max((g.distance(i, j) for i, j in ps), default=0)
