"""Graph families: labeled graphs, isomorphism classes, threshold and permutation graphs.

Members are identified by small codes:

* labeled graphs by their edge bitmask on ``[n]``;
* unlabeled classes by an :class:`IsoClassCode` (minimum bitmask over relabelings);
* threshold graphs by their binary word of length ``n - 1``;
* permutation graphs by the permutation (a tuple in one-line notation).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import comb
from typing import Iterable, Sequence

from .ordered_graph import GraphError, OrderedPartialGraph, from_mask, pair_bits, pairs

LABELED = "labeled"
UNLABELED = "unlabeled"
THRESHOLD = "threshold"
PERMUTATION = "permutation"
KINDS = (LABELED, UNLABELED, THRESHOLD, PERMUTATION)

GUARD_ENV = "UCF_GUARD_OVERRIDE"


class GuardError(RuntimeError):
    """A size guard was exceeded; set UCF_GUARD_OVERRIDE to lift it."""


class FamilyError(ValueError):
    """Input is not a member of the requested family."""


def guard(ok: bool, what: str) -> None:
    if not ok and not os.environ.get(GUARD_ENV):
        raise GuardError(f"guard exceeded: {what} (set {GUARD_ENV}=1 to override)")


@dataclass(frozen=True)
class FamilyDescriptor:
    """Target family with window size ``n``, overlap ``s`` and fold ``f``."""

    kind: str
    n: int
    s: int | None = None
    f: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family {self.kind!r}")
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.s is None:
            object.__setattr__(self, "s", self.n - 1)
        if not 1 <= self.s <= self.n - 1:
            raise ValueError(f"overlap s={self.s} not in [1, {self.n - 1}]")
        if self.f < 1:
            raise ValueError("f must be positive")
        if self.f > 1 and self.kind != UNLABELED:
            raise ValueError("f > 1 only applies to unlabeled families")


@dataclass(frozen=True, order=True)
class IsoClassCode:
    n: int
    canon: int

    def __str__(self):
        return f"n{self.n}:{self.canon:#x}"

    @classmethod
    def parse(cls, text: str) -> IsoClassCode:
        head, _, tail = text.strip().partition(":")
        if not head.startswith("n") or not tail:
            raise ValueError(f"bad iso-class code {text!r}")
        return cls(int(head[1:]), int(tail, 16))


# ---- labeled / unlabeled -------------------------------------------------


@lru_cache(maxsize=None)
def relabel_maps(n: int) -> tuple[tuple[int, ...], ...]:
    """For each permutation of ``[n]``, the image bit position of every pair bit."""
    ps = pairs(n)
    bits = pair_bits(n)
    maps = []
    for perm in permutations(range(1, n + 1)):
        img = []
        for i, j in ps:
            a, b = perm[i - 1], perm[j - 1]
            img.append(bits[(a, b) if a < b else (b, a)].bit_length() - 1)
        maps.append(tuple(img))
    return tuple(maps)


def apply_relabel(mask: int, img: Sequence[int]) -> int:
    out = 0
    k = 0
    while mask:
        if mask & 1:
            out |= 1 << img[k]
        mask >>= 1
        k += 1
    return out


def _mask_of(g) -> tuple[int, int]:
    if isinstance(g, OrderedPartialGraph):
        if g.diamond_groups:
            raise GraphError("canonical form needs a graph without diamonds")
        return g.n, g.edge_mask()
    n, mask = g
    return n, mask


def canonical_form(g) -> IsoClassCode:
    """Minimum edge bitmask over all relabelings. Accepts a graph or ``(n, mask)``."""
    n, mask = _mask_of(g)
    guard(n <= 8, f"canonical form for n={n} > 8")
    return IsoClassCode(n, _canon(n, mask))


@lru_cache(maxsize=1 << 16)
def _canon(n: int, mask: int) -> int:
    return min(apply_relabel(mask, img) for img in relabel_maps(n))


@lru_cache(maxsize=None)
def _class_table(n: int) -> tuple[dict[int, int], dict[int, int]]:
    """``(mask -> canon, canon -> orbit size)`` over all labeled graphs on ``[n]``."""
    maps = relabel_maps(n)
    to_canon: dict[int, int] = {}
    sizes: dict[int, int] = {}
    for mask in range(1 << comb(n, 2)):
        if mask in to_canon:
            continue
        orbit = {apply_relabel(mask, img) for img in maps}
        c = min(orbit)
        for m in orbit:
            to_canon[m] = c
        sizes[c] = len(orbit)
    return to_canon, sizes


def class_of_mask(n: int, mask: int) -> int:
    """Canonical mask of a labeled graph, using the full table when it is small."""
    if n <= 5:
        return _class_table(n)[0][mask]
    return _canon(n, mask)


def iso_classes(n: int) -> list[IsoClassCode]:
    guard(n <= 6 or (n <= 8 and bool(os.environ.get(GUARD_ENV))), f"class enumeration for n={n}")
    return [IsoClassCode(n, c) for c in sorted(_class_table(n)[1])]


def labeled_copy_count(c: IsoClassCode) -> int:
    """Number of labeled graphs on ``[n]`` in the class (``n!/|Aut|``)."""
    guard(c.n <= 8, f"copy count for n={c.n}")
    if c.n <= 6:
        sizes = _class_table(c.n)[1]
        if c.canon not in sizes:
            raise FamilyError(f"{c} is not a canonical code")
        return sizes[c.canon]
    return len({apply_relabel(c.canon, img) for img in relabel_maps(c.n)})


# ---- threshold -----------------------------------------------------------


def _bits(b) -> str:
    s = "".join(str(x) for x in b) if not isinstance(b, str) else b
    if set(s) - {"0", "1"}:
        raise FamilyError(f"non-binary threshold word {s!r}")
    return s


def threshold_from_word(b) -> OrderedPartialGraph:
    """Add vertices ``2, 3, ...``; vertex ``i+1`` dominates its predecessors iff ``b_i = 1``."""
    s = _bits(b)
    edges = [(j, i + 1) for i, bit in enumerate(s, start=1) if bit == "1" for j in range(1, i + 1)]
    return OrderedPartialGraph(len(s) + 1, frozenset(edges))


def word_from_threshold(g: OrderedPartialGraph) -> str:
    """Recover the binary word by repeatedly deleting a dominating or isolated vertex.

    Ties go to the dominating vertex of largest index, then the isolated vertex of
    largest index. The result is re-encoded and must reproduce ``g`` exactly.
    """
    if g.diamond_groups:
        raise FamilyError("threshold graphs carry no diamonds")
    alive = set(range(1, g.n + 1))
    adj = {v: set() for v in alive}
    for i, j in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    out = []
    while len(alive) > 1:
        dom = [v for v in alive if len(adj[v] & alive) == len(alive) - 1]
        iso = [v for v in alive if not adj[v] & alive]
        if dom:
            v, bit = max(dom), "1"
        elif iso:
            v, bit = max(iso), "0"
        else:
            raise FamilyError("not a threshold graph: no dominating or isolated vertex")
        out.append(bit)
        alive.remove(v)
    word = "".join(reversed(out))
    if threshold_from_word(word) != g.linear():
        raise FamilyError("not in threshold construction order")
    return word


def threshold_words(n: int) -> list[str]:
    return ["".join(t) for t in product("01", repeat=n - 1)]


# ---- permutations --------------------------------------------------------


def red(values: Sequence) -> tuple[int, ...]:
    """Reduced form: replace the k-th smallest value by k. Values must be distinct."""
    vals = list(values)
    if len(set(vals)) != len(vals):
        raise FamilyError(f"repeated value in {vals}")
    rank = {v: k + 1 for k, v in enumerate(sorted(vals))}
    return tuple(rank[v] for v in vals)


def parse_perm(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "," in text:
        return tuple(int(t) for t in text.split(","))
    return tuple(int(c) for c in text)


def format_perm(p: Sequence[int]) -> str:
    return ",".join(str(v) for v in p)


def perm_graph(p: Sequence) -> OrderedPartialGraph:
    """Inversion graph: edge ``{i,j}`` for ``i<j`` iff ``p_i > p_j``."""
    vals = list(p)
    if len(set(vals)) != len(vals):
        raise FamilyError(f"repeated value in {vals}")
    n = len(vals)
    return OrderedPartialGraph(
        n, frozenset((i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if vals[i] > vals[j])
    )


def perm_mask(p: Sequence) -> int:
    n = len(p)
    bits = pair_bits(n)
    return sum(bits[(i + 1, j + 1)] for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def perm_from_graph(g: OrderedPartialGraph) -> tuple[int, ...]:
    """Decode the inversion table ``c_i = #{j > i : {i,j} in E}`` into a permutation of ``[n]``."""
    if g.diamond_groups:
        raise FamilyError("permutation graphs carry no diamonds")
    remaining = list(range(1, g.n + 1))
    out = []
    for i in range(1, g.n + 1):
        c = sum(1 for j in range(i + 1, g.n + 1) if (i, j) in g.edges)
        if c >= len(remaining):
            raise FamilyError("not a permutation graph: inconsistent inversion table")
        out.append(remaining.pop(c))
    p = tuple(out)
    if perm_graph(p) != g.linear():
        raise FamilyError("not a permutation graph: inversion table does not reproduce the edges")
    return p


def order_iso_words(u: Sequence, v: Sequence) -> bool:
    """Same relative order at every pair of positions."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch {len(u)} vs {len(v)}")
    n = len(u)
    return all((u[i] < u[j]) == (v[i] < v[j]) and (u[i] == u[j]) == (v[i] == v[j]) for i in range(n) for j in range(i + 1, n))


def perms(n: int) -> list[tuple[int, ...]]:
    return list(permutations(range(1, n + 1)))


# ---- generic -------------------------------------------------------------


def enumerate_family(d: FamilyDescriptor) -> list:
    """Member codes in deterministic order.

    labeled: edge masks ``0 .. 2^C(n,2)-1``; unlabeled: :class:`IsoClassCode`;
    threshold: binary strings; permutation: tuples in lexicographic order.
    """
    n = d.n
    if d.kind == LABELED:
        guard(n <= 7, f"labeled enumeration for n={n} > 7")
        return list(range(1 << comb(n, 2)))
    if d.kind == UNLABELED:
        guard(n <= 8, f"unlabeled enumeration for n={n} > 8")
        return [IsoClassCode(n, c) for c in sorted(_class_table(n)[1])]
    if d.kind == THRESHOLD:
        guard(n <= 20, f"threshold enumeration for n={n}")
        return threshold_words(n)
    guard(n <= 9, f"permutation enumeration for n={n}")
    return perms(n)


def member_graph(kind: str, n: int, code) -> OrderedPartialGraph:
    """Representative ordered graph for a member code."""
    if kind == LABELED:
        return from_mask(code, n)
    if kind == UNLABELED:
        return from_mask(code.canon, n)
    if kind == THRESHOLD:
        return threshold_from_word(code)
    return perm_graph(code)


def member_code(kind: str, n: int, mask: int):
    """Member code of a labeled graph given by mask, or ``None`` if it is not in the family."""
    if kind == LABELED:
        return mask
    if kind == UNLABELED:
        return IsoClassCode(n, class_of_mask(n, mask))
    if kind == THRESHOLD and n <= 14:
        return _threshold_table(n).get(mask)
    if kind == PERMUTATION and n <= 8:
        return _perm_table(n).get(mask)
    g = from_mask(mask, n)
    try:
        if kind == THRESHOLD:
            return word_from_threshold(g)
        return perm_from_graph(g)
    except FamilyError:
        return None


@lru_cache(maxsize=None)
def _threshold_table(n: int) -> dict[int, str]:
    return {threshold_from_word(b).edge_mask(): b for b in threshold_words(n)}


@lru_cache(maxsize=None)
def _perm_table(n: int) -> dict[int, tuple[int, ...]]:
    return {perm_mask(p): p for p in perms(n)}


def format_code(kind: str, n: int, code) -> str:
    if kind == LABELED:
        return f"{code:#x}"
    if kind == UNLABELED:
        return str(code)
    if kind == THRESHOLD:
        return code
    return format_perm(code)


def parse_code(kind: str, n: int, text: str):
    text = text.strip()
    if kind == LABELED:
        return int(text, 16) if text.lower().startswith("0x") else int(text)
    if kind == UNLABELED:
        return IsoClassCode.parse(text)
    if kind == THRESHOLD:
        return _bits(text)
    return parse_perm(text)


def masks_of(codes: Iterable[int], n: int) -> list[OrderedPartialGraph]:
    return [from_mask(m, n) for m in codes]
