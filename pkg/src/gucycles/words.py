"""Partial words, De Bruijn cycles and universal cycles for permutations.

A :class:`PartialWord` is a linear or cyclic sequence of letters and diamonds.
A :class:`Diamond` with an empty allowed set stands for any letter; a restricted
diamond carries its explicit set of allowed letters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterable, Sequence

from .euler import hierholzer
from .families import guard
from .report import CoverageReport


class WordError(ValueError):
    """Malformed word or invalid word-level request."""


@dataclass(frozen=True)
class Diamond:
    allowed: frozenset = frozenset()

    @property
    def unrestricted(self) -> bool:
        return not self.allowed

    def values(self, alphabet: Sequence) -> tuple:
        if not self.allowed:
            return tuple(alphabet)
        return tuple(a for a in alphabet if a in self.allowed)

    def __str__(self):
        if not self.allowed:
            return "*"
        return "*{" + ",".join(str(a) for a in sorted(self.allowed)) + "}"


DIAMOND = Diamond()


@dataclass(frozen=True)
class WordFamily:
    """Target of a word-coverage check: all words of length ``n`` over an alphabet, or ``S_n``."""

    kind: str
    n: int
    s: int | None = None
    alphabet: tuple = ()


@dataclass(frozen=True)
class PartialWord:
    tokens: tuple
    cyclic: bool = False
    alphabet: tuple = ("0", "1")

    def __post_init__(self):
        if not self.tokens:
            raise WordError("empty word")
        letters = set(self.alphabet)
        for t in self.tokens:
            if isinstance(t, Diamond):
                if not t.allowed <= letters:
                    raise WordError(f"diamond {t} allows letters outside the alphabet")
            elif t not in letters:
                raise WordError(f"letter {t!r} not in alphabet")
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))

    def __len__(self):
        return len(self.tokens)

    def __str__(self):
        sep = "" if all(len(str(a)) == 1 for a in self.alphabet) else ","
        return sep.join(str(t) for t in self.tokens)

    @classmethod
    def parse(cls, text: str, cyclic: bool = False, alphabet: Sequence | None = None) -> PartialWord:
        """Parse ``*``/``⋄`` for diamonds and ``*{a,b}`` for restricted ones.

        Comma-separated input gives integer letters; otherwise single characters.
        """
        toks = _tokenize(text.strip())
        if alphabet is None:
            letters = {t for t in toks if not isinstance(t, Diamond)}
            for t in toks:
                if isinstance(t, Diamond):
                    letters |= t.allowed
            if all(isinstance(t, str) for t in letters) and letters <= {"0", "1"}:
                alphabet = ("0", "1")
            else:
                alphabet = tuple(sorted(letters))
        return cls(tuple(toks), cyclic, tuple(alphabet))

    @property
    def diamond_positions(self) -> list[int]:
        """1-based positions of diamonds."""
        return [k + 1 for k, t in enumerate(self.tokens) if isinstance(t, Diamond)]

    def at(self, pos: int):
        """Token at 1-based position, wrapping for cyclic words."""
        if self.cyclic:
            return self.tokens[(pos - 1) % len(self.tokens)]
        if not 1 <= pos <= len(self.tokens):
            raise WordError(f"position {pos} out of range")
        return self.tokens[pos - 1]

    def window(self, pos: int, length: int) -> tuple:
        if self.cyclic:
            if length > len(self.tokens):
                raise WordError("window longer than cyclic word")
            return tuple(self.at(pos + k) for k in range(length))
        if pos < 1 or pos + length - 1 > len(self.tokens):
            raise WordError(f"window at {pos} of length {length} out of range")
        return self.tokens[pos - 1 : pos - 1 + length]

    def positions(self, length: int, step: int = 1) -> list[int]:
        if self.cyclic:
            if len(self.tokens) % step:
                raise WordError(f"cyclic length {len(self.tokens)} not divisible by step {step}")
            return list(range(1, len(self.tokens) + 1, step))
        return list(range(1, len(self.tokens) - length + 2, step))


def _tokenize(text: str) -> list:
    text = text.replace("⋄", "*")
    out = []
    comma = "," in _strip_braces(text)
    k = 0
    buf = ""
    while k < len(text):
        c = text[k]
        if c == "*":
            if buf:
                out.append(_letter(buf, comma))
                buf = ""
            if k + 1 < len(text) and text[k + 1] == "{":
                end = text.index("}", k)
                vals = [v.strip() for v in text[k + 2 : end].split(",") if v.strip()]
                out.append(Diamond(frozenset(_letter(v, comma or not all(len(v) == 1 for v in vals)) for v in vals)))
                k = end + 1
            else:
                out.append(DIAMOND)
                k += 1
            continue
        if c == ",":
            if buf:
                out.append(_letter(buf, comma))
            buf = ""
        elif c.isspace():
            pass
        elif comma:
            buf += c
        else:
            out.append(c)
        k += 1
    if buf:
        out.append(_letter(buf, comma))
    return out


def _strip_braces(text: str) -> str:
    out, depth = [], 0
    for c in text:
        if c == "{":
            depth += 1
        elif c == "}":
            depth -= 1
        elif depth == 0:
            out.append(c)
    return "".join(out)


def _letter(s: str, numeric: bool):
    return int(s) if numeric else s


def int_word(values: Iterable[int], cyclic: bool = False) -> PartialWord:
    vals = tuple(values)
    return PartialWord(vals, cyclic, tuple(sorted(set(vals))))


def numeric_word(w: PartialWord) -> PartialWord:
    """Reinterpret digit letters (and restricted-diamond letters) as integers."""
    toks = []
    for t in w.tokens:
        if isinstance(t, Diamond):
            toks.append(Diamond(frozenset(int(a) for a in t.allowed)))
        else:
            toks.append(int(t))
    letters = {t for t in toks if not isinstance(t, Diamond)}
    for t in toks:
        if isinstance(t, Diamond):
            letters |= t.allowed
    return PartialWord(tuple(toks), w.cyclic, tuple(sorted(letters)))


def _matches(token, letter, alphabet) -> bool:
    if isinstance(token, Diamond):
        return token.unrestricted and letter in alphabet or letter in token.allowed
    return token == letter


def covers(w: PartialWord, u: Sequence, at: int) -> bool:
    """``u`` matches the window of ``w`` at 1-based position ``at``, diamonds matching any allowed letter."""
    u = tuple(u)
    if any(isinstance(x, Diamond) for x in u):
        raise WordError("covered word must be diamond-free")
    win = w.window(at, len(u))
    return all(_matches(t, x, w.alphabet) for t, x in zip(win, u))


def window_words(w: PartialWord, pos: int, length: int) -> list[tuple[int, tuple]]:
    """``(diamond selection index, word)`` for each distinct realization of a window."""
    win = w.window(pos, length)
    choices = [t.values(w.alphabet) if isinstance(t, Diamond) else (t,) for t in win]
    seen: dict[tuple, int] = {}
    for k, word in enumerate(product(*choices)):
        seen.setdefault(word, k)
    return [(k, word) for word, k in seen.items()]


def verify_upword(w: PartialWord, n: int) -> CoverageReport:
    """Positions at which ``w`` covers each word of length ``n`` (all ``|w|`` starts when cyclic)."""
    fam = WordFamily("words", n, alphabet=w.alphabet)
    rep = CoverageReport(fam, 1, {u: [] for u in product(w.alphabet, repeat=n)})
    if n > len(w):
        return rep
    for pos in w.positions(n):
        win = w.window(pos, n)
        rep.windows += 1
        rep.diamonds_per_window[sum(isinstance(t, Diamond) for t in win)] += 1
        for sel, u in window_words(w, pos, n):
            rep.add(u, pos, sel)
    return rep


def de_bruijn_graph(a: int, n: int, alphabet: Sequence | None = None):
    """Arrays ``(vertices, tails, heads, labels)`` of the order-``n`` De Bruijn graph.

    Vertices are words of length ``n-1``; the edge for word ``x`` goes from its
    prefix to its suffix. Edges are listed in lexicographic order.
    """
    alphabet = tuple(str(k) for k in range(a)) if alphabet is None else tuple(alphabet)
    verts = list(product(alphabet, repeat=n - 1))
    vid = {v: k for k, v in enumerate(verts)}
    labels = list(product(alphabet, repeat=n))
    tails = [vid[x[:-1]] for x in labels]
    heads = [vid[x[1:]] for x in labels]
    return verts, tails, heads, labels


def least_rotation(seq: Sequence) -> tuple:
    s = tuple(seq)
    return min(s[k:] + s[:k] for k in range(len(s))) if s else s


def _word_of_circuit(circuit: Sequence[int], labels) -> tuple:
    return tuple(labels[k][0] for k in circuit)


def de_bruijn_cycle(a: int, n: int) -> PartialWord:
    """Cyclic word of length ``a^n`` whose ``n``-windows are all words once each.

    Built from a smallest-edge-first Euler tour and rotated to its least form.
    """
    if a < 2 or n < 1:
        raise WordError("need a >= 2 and n >= 1")
    guard(a**n <= 10**6, f"De Bruijn cycle of length {a}^{n}")
    verts, tails, heads, labels = de_bruijn_graph(a, n)
    circuit = hierholzer(len(verts), tails, heads, 0)
    alphabet = tuple(str(k) for k in range(a))
    return PartialWord(least_rotation(_word_of_circuit(circuit, labels)), True, alphabet)


def de_bruijn_count(a: int, n: int) -> int:
    """Closed form ``(a!)^(a^(n-1)) / a^n``."""
    return factorial(a) ** (a ** (n - 1)) // a**n


def enumerate_de_bruijn(a: int, n: int) -> list[PartialWord]:
    """All De Bruijn cycles up to rotation, each in least-rotation form, sorted.

    Backtracks over Euler circuits that begin with the all-zero loop, so each
    cyclic word is produced exactly once.
    """
    guard(de_bruijn_count(a, n) <= 10**4, f"De Bruijn enumeration for a={a}, n={n}")
    verts, tails, heads, labels = de_bruijn_graph(a, n)
    m = len(labels)
    out_edges = [[] for _ in verts]
    for k in range(m):
        out_edges[tails[k]].append(k)
    used = [False] * m
    path = [0]
    used[0] = True
    found = []

    def extend(v):
        if len(path) == m:
            if heads[path[-1]] == tails[path[0]]:
                found.append(least_rotation(_word_of_circuit(path, labels)))
            return
        for k in out_edges[v]:
            if not used[k]:
                used[k] = True
                path.append(k)
                extend(heads[k])
                path.pop()
                used[k] = False

    extend(heads[0])
    alphabet = tuple(str(k) for k in range(a))
    return [PartialWord(w, True, alphabet) for w in sorted(found)]


def upword_diamond(n: int) -> PartialWord:
    """The linear partial word ``⋄^(n-1) 0 1^n`` over ``{0,1}``."""
    if n < 2:
        raise WordError("n must be at least 2")
    return PartialWord((DIAMOND,) * (n - 1) + ("0",) + ("1",) * n, False)


# ---- permutations ----------------------------------------------------------


def covered_perms(window: Sequence) -> list[tuple[int, ...]]:
    """Permutations ``p`` of ``[k]`` with ``w_i < w_j => p_i < p_j`` for a diamond-free window.

    Equal letters are incomparable, so a window with ties covers every
    linear extension of its weak order.
    """
    k = len(window)
    out = []
    for p in permutations(range(1, k + 1)):
        if all(not (window[i] < window[j]) or p[i] < p[j] for i in range(k) for j in range(k)):
            out.append(p)
    return out


def perm_window_cover(w: PartialWord, pos: int, n: int) -> list[tuple[int, tuple]]:
    """``(diamond selection, permutation)`` pairs covered by the window, deduplicated."""
    seen: dict[tuple, int] = {}
    for sel, word in window_words(w, pos, n):
        for p in covered_perms(word):
            seen.setdefault(p, sel)
    return [(sel, p) for p, sel in seen.items()]


def perm_positions(w: PartialWord, n: int, s: int) -> list[int]:
    """Qualifying window starts: ``1, 1+(n-s), 1+2(n-s), ...``."""
    return w.positions(n, n - s)


def verify_perm_ucycle(w, n: int, s: int | None = None) -> CoverageReport:
    """Coverage of ``S_n`` by the qualifying ``n``-windows of a word over integers.

    Accepts a :class:`PartialWord` or a plain integer sequence (taken as cyclic).
    A diamond-free cyclic word must have length ``n!(n-s)``.
    """
    s = n - 1 if s is None else s
    if not 1 <= s <= n - 1:
        raise WordError(f"overlap s={s} not in [1,{n - 1}]")
    if not isinstance(w, PartialWord):
        w = int_word(w, cyclic=True)
    if w.cyclic:
        if len(w) % (n - s):
            raise WordError(f"cyclic length {len(w)} not divisible by n-s={n - s}")
        if not w.diamond_positions and len(w) != factorial(n) * (n - s):
            raise WordError(f"cyclic length {len(w)} != n!(n-s) = {factorial(n) * (n - s)}")
    fam = WordFamily("permutations", n, s)
    rep = CoverageReport(fam, 1, {p: [] for p in permutations(range(1, n + 1))})
    for pos in perm_positions(w, n, s):
        rep.windows += 1
        win = w.window(pos, n)
        rep.diamonds_per_window[sum(isinstance(t, Diamond) for t in win)] += 1
        for sel, p in perm_window_cover(w, pos, n):
            rep.add(p, pos, sel)
    return rep


def perm_windows(w: Sequence[int], n: int, s: int | None = None, cyclic: bool = True) -> list[tuple[int, ...]]:
    """Reduced qualifying windows of a diamond-free integer word, in order."""
    from .families import red

    s = n - 1 if s is None else s
    pw = w if isinstance(w, PartialWord) else int_word(w, cyclic)
    return [red(pw.window(pos, n)) for pos in perm_positions(pw, n, s)]


def diamond_stats(rep: CoverageReport) -> dict:
    return dict(sorted(Counter(rep.diamonds_per_window).items()))
