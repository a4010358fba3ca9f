"""Coverage reports shared by the graph and word verifiers."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable

EXACT = "exact"
UNDER = "under"
OVER = "over"


@dataclass
class CoverageReport:
    """Who was covered where.

    ``hits`` maps each family member (in enumeration order) to a list of
    ``(window start, diamond selection)`` pairs; ``selection`` is a bitmask over
    the host's diamond groups (or diamond positions for words). Realizations that
    are not family members land in ``foreign`` and do not affect the verdict.
    """

    family: Any
    f: int
    hits: dict = field(default_factory=dict)
    foreign: dict = field(default_factory=dict)
    windows: int = 0
    dedup_windows: list = field(default_factory=list)
    diamonds_per_window: Counter = field(default_factory=Counter)

    def add(self, code, start: int, selection: int = 0) -> None:
        if code in self.hits:
            self.hits[code].append((start, selection))
        else:
            self.foreign.setdefault(code, []).append((start, selection))

    def counts(self) -> dict:
        return {c: len(h) for c, h in self.hits.items()}

    @property
    def under(self) -> list:
        return [c for c, h in self.hits.items() if len(h) < self.f]

    @property
    def over(self) -> list:
        return [c for c, h in self.hits.items() if len(h) > self.f]

    @property
    def verdict(self) -> str:
        # a member that is missed is the more basic failure, so it wins
        if self.under:
            return UNDER
        if self.over:
            return OVER
        return EXACT

    @property
    def exact(self) -> bool:
        return self.verdict == EXACT

    def total_hits(self) -> int:
        return sum(len(h) for h in self.hits.values())

    def order(self) -> list:
        """Members sorted by their first hit, for single-cover reports."""
        first = [(h[0][0], c) for c, h in self.hits.items() if h]
        return [c for _, c in sorted(first, key=lambda t: t[0])]

    def summary(self, fmt: Callable = str) -> str:
        line = f"{self.verdict}: {len(self.hits)} members, {self.windows} windows, {self.total_hits()} hits, f={self.f}"
        if self.under:
            line += "; under: " + " ".join(fmt(c) for c in self.under)
        if self.over:
            line += "; over: " + " ".join(fmt(c) for c in self.over)
        return line

    def to_json(self, fmt: Callable = str) -> dict:
        return {
            "family": _family_json(self.family),
            "verdict": self.verdict,
            "f": self.f,
            "windows": self.windows,
            "counts": {fmt(c): len(h) for c, h in self.hits.items()},
            "hits": {fmt(c): [list(x) for x in h] for c, h in self.hits.items()},
            "under": [fmt(c) for c in self.under],
            "over": [fmt(c) for c in self.over],
            "foreign": {fmt(c): [list(x) for x in h] for c, h in self.foreign.items()},
            "dedup_windows": list(self.dedup_windows),
            "diamonds_per_window": {str(k): v for k, v in sorted(self.diamonds_per_window.items())},
        }


def _family_json(fam) -> dict:
    if hasattr(fam, "__dataclass_fields__"):
        return {k: getattr(fam, k) for k in fam.__dataclass_fields__}
    return {"name": str(fam)}
