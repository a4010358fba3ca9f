"""JSON, DOT and word-file formats."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .euler import EulerTour
from .families import format_code, member_code, parse_code
from .ordered_graph import GraphError, OrderedPartialGraph
from .words import PartialWord, WordError

_COLORS = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan", "gold", "gray")


def graph_to_json(g: OrderedPartialGraph) -> dict:
    return {
        "n": g.n,
        "cyclic": g.cyclic,
        "edges": [list(p) for p in sorted(g.edges)],
        "diamond_groups": [[list(p) for p in sorted(grp)] for grp in sorted(g.diamond_groups, key=sorted)],
    }


def graph_from_json(obj: dict) -> OrderedPartialGraph:
    try:
        n = int(obj["n"])
        cyclic = bool(obj.get("cyclic", False))
        edges = frozenset(tuple(int(x) for x in p) for p in obj.get("edges", []))
        groups = tuple(frozenset(tuple(int(x) for x in p) for p in grp) for grp in obj.get("diamond_groups", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    if any(len(p) != 2 for p in edges) or any(len(p) != 2 for grp in groups for p in grp):
        raise GraphError("malformed graph JSON: pairs must have two entries")
    return OrderedPartialGraph(n, edges, groups, cyclic)


def load_graph(path) -> OrderedPartialGraph:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed JSON in {path}: {exc}") from exc
    if not isinstance(obj, dict):
        raise GraphError("graph JSON must be an object")
    return graph_from_json(obj)


def _layout(obj: Any, depth: int = 0) -> str:
    """Top-level keys and lists of records one per line; everything else compact."""
    pad = " " * (depth + 1)
    if isinstance(obj, dict) and depth == 0:
        items = [f"{pad}{json.dumps(k)}: {_layout(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n}"
    if isinstance(obj, list) and obj and all(isinstance(x, dict) for x in obj):
        return "[\n" + ",\n".join(pad + json.dumps(x) for x in obj) + "\n" + " " * depth + "]"
    return json.dumps(obj)


def dump_json(obj: Any, path=None) -> str:
    text = _layout(obj) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def graph_to_dot(g: OrderedPartialGraph, name: str = "G") -> str:
    """Vertices on one rank line; solid edges, dashed diamond pairs coloured by group."""
    lines = [f"graph {name} {{", "  rankdir=LR;", "  { rank=same; " + " ".join(str(v) for v in range(1, g.n + 1)) + "; }"]
    for v in range(1, g.n):
        lines.append(f"  {v} -- {v + 1} [style=invis];")
    for i, j in sorted(g.edges):
        lines.append(f"  {i} -- {j};")
    for k, grp in enumerate(g.diamond_groups):
        color = _COLORS[k % len(_COLORS)]
        for i, j in sorted(grp):
            lines.append(f'  {i} -- {j} [style=dashed, color="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _payload_json(p):
    if isinstance(p, OrderedPartialGraph):
        return graph_to_json(p)
    return list(p)


def digraph_to_json(d) -> dict:
    return {
        "n": d.n,
        "s": d.s,
        "kind": d.kind,
        "vertices": [_payload_json(v) for v in d.vertices],
        "edges": [
            {"id": e.id, "tail": e.tail, "head": e.head, "payload": _payload_json(e.payload), "origin": list(e.origin)}
            for e in d.edges
        ],
    }


def digraph_to_dot(d, name: str = "D") -> str:
    def label(p):
        if isinstance(p, OrderedPartialGraph):
            text = f"{p.edge_mask():#x}"
            if p.diamond_groups:
                text += "+" + "".join(f"*{a}{b}" for grp in p.diamond_groups for a, b in sorted(grp))
            return text
        return "".join(str(x) for x in p)

    lines = [f"digraph {name} {{"]
    for k, v in enumerate(d.vertices):
        lines.append(f'  v{k} [label="{label(v)}"];')
    for e in d.edges:
        lines.append(f'  v{e.tail} -> v{e.head} [label="{e.id}:{label(e.payload)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def tour_to_json(t: EulerTour) -> dict:
    return t.to_json()


def tour_from_json(obj: dict) -> EulerTour:
    return EulerTour(tuple(int(x) for x in obj["edge_ids"]), int(obj["start_vertex"]))


# ---- word files --------------------------------------------------------------


def read_word(text: str) -> PartialWord:
    """Header line ``cyclic`` or ``linear`` followed by the word (defaults to linear without header)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise WordError("empty word file")
    cyclic = False
    if lines[0].lower() in ("cyclic", "linear"):
        cyclic = lines[0].lower() == "cyclic"
        lines = lines[1:]
    if not lines:
        raise WordError("word file has no word")
    return PartialWord.parse("".join(lines), cyclic)


def load_word(path) -> PartialWord:
    return read_word(Path(path).read_text())


def write_word(w: PartialWord) -> str:
    return ("cyclic" if w.cyclic else "linear") + "\n" + str(w) + "\n"


# ---- order files ---------------------------------------------------------------


def read_order(text: str, kind: str, n: int) -> list:
    """One member per line: a JSON edge list, a hex mask, an iso code, a permutation or a threshold word."""
    out = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        if ln.startswith("["):
            g = OrderedPartialGraph(n, frozenset(tuple(p) for p in json.loads(ln)))
            code = member_code(kind, n, g.edge_mask())
            if code is None:
                raise GraphError(f"order entry {ln} is not a family member")
            out.append(code)
        else:
            out.append(parse_code(kind, n, ln))
    return out


def format_members(kind: str, n: int, codes) -> list[str]:
    return [format_code(kind, n, c) for c in codes]



# ---- bundled fixtures -----------------------------------------------------------

FIXTURE_DIR = Path(__file__).with_name("fixtures")


def fixture_names() -> list[str]:
    return sorted(p.name for p in FIXTURE_DIR.glob("*.json"))


def load_fixture(name: str) -> tuple[OrderedPartialGraph, dict]:
    """Graph plus the raw JSON record (family, source word, and so on)."""
    path = FIXTURE_DIR / (name if name.endswith(".json") else name + ".json")
    obj = json.loads(path.read_text())
    return graph_from_json(obj), obj
