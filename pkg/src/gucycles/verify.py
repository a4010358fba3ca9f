"""Exhaustive coverage checks for graph universal (partial) cycles and words."""

from __future__ import annotations

from typing import Sequence

from .families import FamilyDescriptor, UNLABELED, enumerate_family, member_code
from .ordered_graph import GraphError, OrderedPartialGraph, window_realizations
from .report import CoverageReport


class VerifyError(GraphError):
    """The host graph cannot be checked against the family (arity or shape mismatch)."""


def qualifying_starts(g: OrderedPartialGraph, n: int, s: int) -> list[int]:
    """Window starts ``1, 1+(n-s), ...``; every start for a cyclic host, only fitting ones for a linear host."""
    step = n - s
    if g.cyclic:
        if g.n % step:
            raise VerifyError(f"cyclic host of {g.n} vertices is not a multiple of n-s={step}")
        return list(range(1, g.n + 1, step))
    return list(range(1, g.n - n + 2, step))


def verify_graph_cover(g: OrderedPartialGraph, d: FamilyDescriptor) -> CoverageReport:
    """Count, for each family member, the windows (and diamond selections) that realize it.

    Realizations are deduplicated within a window; for the unlabeled family a
    window counts once per isomorphism class, and windows where that merged
    several realizations are listed in ``dedup_windows``.
    """
    n, s = d.n, d.s
    if g.n < n:
        raise VerifyError(f"host has {g.n} vertices, fewer than n={n}")
    if g.cyclic and g.n < n:
        raise VerifyError("cyclic host shorter than a window")
    rep = CoverageReport(d, d.f, {c: [] for c in enumerate_family(d)})
    for st in qualifying_starts(g, n, s):
        rep.windows += 1
        real = window_realizations(g, st, n)
        groups_here = 0
        seen = set()
        merged = False
        for sel, mask in sorted(real, key=lambda t: t[0]):
            groups_here |= sel
            code = member_code(d.kind, n, mask)
            if code is None:
                rep.add(("foreign", mask), st, sel)
                continue
            if code in seen:
                merged = True
                continue
            seen.add(code)
            rep.add(code, st, sel)
        rep.diamonds_per_window[bin(groups_here).count("1")] += 1
        if merged and d.kind == UNLABELED:
            rep.dedup_windows.append(st)
    return rep


def verify_guword(g: OrderedPartialGraph, d: FamilyDescriptor) -> CoverageReport:
    """Coverage check restricted to linear hosts."""
    if g.cyclic:
        raise VerifyError("a guword must be linearly ordered")
    return verify_graph_cover(g, d)


def window_members(g: OrderedPartialGraph, d: FamilyDescriptor) -> list[list]:
    """Members covered by each qualifying window, in window order."""
    rep = verify_graph_cover(g, d)
    per: dict[int, list] = {}
    for code, hits in rep.hits.items():
        for st, sel in hits:
            per.setdefault(st, []).append((sel, code))
    return [[c for _, c in sorted(per.get(st, []), key=lambda t: t[0])] for st in qualifying_starts(g, d.n, d.s)]


def verify_order(g: OrderedPartialGraph, expected: Sequence, d: FamilyDescriptor) -> bool:
    """Reading windows in order (cyclically, starting where ``expected[0]`` sits) reproduces ``expected``.

    Windows covering several members contribute them in diamond-selection order.
    """
    rep = verify_graph_cover(g, d)
    if not rep.exact or d.f != 1:
        return False
    flat = [c for win in window_members(g, d) for c in win]
    expected = list(expected)
    if len(flat) != len(expected):
        return False
    if not g.cyclic:
        return flat == expected
    if expected[0] not in flat:
        return False
    k = flat.index(expected[0])
    return flat[k:] + flat[:k] == expected
