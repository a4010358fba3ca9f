"""Command-line interface: ``build``, ``verify`` and ``count``.

Exit codes: 0 success / exact coverage, 1 construction error or order
mismatch, 2 under-coverage, 3 over-coverage, 4 malformed input, 64 bad flags,
65 size guard exceeded (lift with ``UCF_GUARD_OVERRIDE=1``).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions as C
from . import io
from .euler import Multidigraph, count_euler_tours, euler_tour
from .families import KINDS, FamilyDescriptor, GuardError, format_code, iso_classes
from .ordered_graph import GraphError
from .overlap_digraph import (
    arc_digraph,
    build_perm_digraph,
    find_2tours,
    find_loops,
    fully_compressed,
)
from .report import EXACT, OVER, UNDER
from .verify import verify_graph_cover, verify_order
from .words import (
    PartialWord,
    WordError,
    de_bruijn_cycle,
    de_bruijn_graph,
    enumerate_de_bruijn,
    numeric_word,
    upword_diamond,
    verify_perm_ucycle,
    verify_upword,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_UNDER = 2
EXIT_OVER = 3
EXIT_MALFORMED = 4
EXIT_USAGE = 64
EXIT_GUARD = 65

VERDICT_EXIT = {EXACT: EXIT_OK, UNDER: EXIT_UNDER, OVER: EXIT_OVER}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _emit(text: str, path) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _summary(family: str, n, s, length, groups, out) -> None:
    line = f"{family} n={n} s={s} length={length} diamond_groups={groups}"
    print(line, file=sys.stdout if out else sys.stderr)


def _emit_graph(g, args, family: str, n: int, s: int, extra: dict | None = None) -> None:
    obj = io.graph_to_json(g)
    if extra:
        obj = {**obj, **extra}
    _emit(io.dump_json(obj), args.output)
    if args.dot:
        Path(args.dot).write_text(io.graph_to_dot(g))
    _summary(family, n, s, g.n, len(g.diamond_groups), args.output)


# ---- build ---------------------------------------------------------------------


def _build(args) -> int:
    what = args.what
    n = args.n
    if what in ("arc", "compress"):
        d = arc_digraph(n) if what == "arc" else fully_compressed(n)
        _emit(io.dump_json(io.digraph_to_json(d)), args.output)
        if args.dot:
            Path(args.dot).write_text(io.digraph_to_dot(d))
        print(f"digraph n={n} s={d.s} vertices={len(d.vertices)} edges={len(d.edges)}", file=sys.stdout if args.output else sys.stderr)
        return EXIT_OK
    if what == "euler":
        if args.family == "permutation":
            d = build_perm_digraph(n, args.s)
        else:
            d = fully_compressed(n) if args.compressed else arc_digraph(n)
        t = euler_tour(d)
        _emit(io.dump_json(io.tour_to_json(t)), args.output)
        print(f"tour n={n} s={d.s} length={len(t)}", file=sys.stdout if args.output else sys.stderr)
        return EXIT_OK
    if what == "labeled-gupcycle":
        if args.length is None:
            raise UsageError("--length is required")
        g = C.labeled_gupcycle(n, args.length)
        _emit_graph(g, args, "labeled", n, n - 1)
        return EXIT_OK
    if what == "threshold":
        if args.from_upword:
            g = C.threshold_gupword_from_upword(io.load_word(args.from_upword), n)
        elif args.from_upcycle:
            g = C.threshold_gupcycle_from_upcycle(io.load_word(args.from_upcycle), n)
        else:
            w = io.load_word(args.from_debruijn) if args.from_debruijn else de_bruijn_cycle(2, n - 1)
            g = C.threshold_gucycle_from_db(w, n)
        _emit_graph(g, args, "threshold", n, n - 1)
        return EXIT_OK
    if what == "perm":
        if args.compress_cycles:
            g = C.perm_gupcycle(n, args.compress_cycles)
        elif args.from_word:
            g = C.perm_gucycle(n, _int_word(args.from_word))
        else:
            g = C.perm_gucycle(n)
        _emit_graph(g, args, "permutation", n, n - 1)
        return EXIT_OK
    if what == "sgocycle":
        if args.s is None:
            raise UsageError("-s is required")
        src = _int_word(args.from_word) if args.from_word else None
        g = C.sgocycle(n, args.s, src)
        _emit_graph(g, args, "permutation", n, args.s)
        return EXIT_OK
    if what == "ffold":
        g, f = C.ffold_gucycle(n)
        _emit_graph(g, args, "unlabeled", n, n - 1, {"f": f})
        print(f"f={f}", file=sys.stdout if args.output else sys.stderr)
        return EXIT_OK
    if what == "debruijn":
        w = de_bruijn_cycle(args.a, n)
        _emit(io.write_word(w), args.output)
        print(f"debruijn a={args.a} n={n} length={len(w)}", file=sys.stdout if args.output else sys.stderr)
        return EXIT_OK
    if what == "upword":
        w = upword_diamond(n)
        _emit(io.write_word(w), args.output)
        print(f"upword n={n} length={len(w)} diamonds={len(w.diamond_positions)}", file=sys.stdout if args.output else sys.stderr)
        return EXIT_OK
    raise UsageError(f"unknown build target {what}")


def _int_word(path) -> PartialWord:
    w = numeric_word(io.load_word(path))
    return PartialWord(w.tokens, True, w.alphabet)


# ---- verify --------------------------------------------------------------------


def _verify(args) -> int:
    try:
        if args.family in ("words", "perm-word"):
            w = io.load_word(args.input)
            if args.family == "words":
                rep = verify_upword(w, args.n)
            else:
                rep = verify_perm_ucycle(numeric_word(w), args.n, args.s)
            fmt = _fmt_word
            order_ok = True
        else:
            g = io.load_graph(args.input)
            d = FamilyDescriptor(args.family, args.n, args.s, args.f)
            rep = verify_graph_cover(g, d)

            def fmt(c):
                if isinstance(c, tuple) and c and c[0] == "foreign":
                    return f"foreign:{c[1]:#x}"
                return format_code(args.family, args.n, c)

            order_ok = True
            if args.order:
                expected = io.read_order(Path(args.order).read_text(), args.family, args.n)
                order_ok = verify_order(g, expected, d)
    except (GraphError, WordError, ValueError, KeyError, OSError) as exc:
        print(f"malformed input: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    obj = rep.to_json(fmt)
    if args.order:
        obj["order_ok"] = order_ok
    _emit(io.dump_json(obj), args.output)
    print(rep.summary(fmt), file=sys.stderr)
    code = VERDICT_EXIT[rep.verdict]
    if code == EXIT_OK and not order_ok:
        print("order mismatch", file=sys.stderr)
        return EXIT_FAIL
    return code


def _fmt_word(c) -> str:
    return "".join(str(x) for x in c) if isinstance(c, tuple) else str(c)


# ---- count ---------------------------------------------------------------------


def _count(args) -> int:
    what = args.what
    if what == "debruijn":
        if args.best:
            verts, tails, heads, _ = de_bruijn_graph(args.a, args.n)
            value = count_euler_tours(Multidigraph.from_arcs(len(verts), zip(tails, heads)))
        else:
            value = len(enumerate_de_bruijn(args.a, args.n))
    elif what == "euler-tours":
        if args.digraph == "debruijn":
            verts, tails, heads, _ = de_bruijn_graph(args.a, args.n)
            d = Multidigraph.from_arcs(len(verts), zip(tails, heads))
        elif args.digraph == "perm":
            d = build_perm_digraph(args.n, args.s)
        elif args.digraph == "compressed":
            d = fully_compressed(args.n)
        else:
            d = arc_digraph(args.n)
        value = count_euler_tours(d)
    elif what == "loops":
        value = len(find_loops(fully_compressed(args.n)))
    elif what == "two-tours":
        value = len(find_2tours(fully_compressed(args.n)))
    elif what == "classes":
        value = len(iso_classes(args.n))
    else:
        raise UsageError(f"unknown count target {what}")
    print(value)
    return EXIT_OK


# ---- parser --------------------------------------------------------------------


BUILD_TARGETS = ("arc", "compress", "euler", "labeled-gupcycle", "threshold", "perm", "sgocycle", "ffold", "debruijn", "upword")
COUNT_TARGETS = ("debruijn", "euler-tours", "loops", "two-tours", "classes")


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gucycles", description="Build and verify universal cycles for graph families.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="construct an object and write it as JSON or a word file")
    b.add_argument("what", choices=BUILD_TARGETS)
    b.add_argument("-n", type=int, required=True)
    b.add_argument("-s", type=int, default=None)
    b.add_argument("-a", type=int, default=2, help="alphabet size for debruijn")
    b.add_argument("--length", type=int)
    b.add_argument("--family", choices=("labeled", "permutation"), default="labeled", help="digraph for euler")
    b.add_argument("--compressed", action="store_true", help="use the fully compressed arc digraph for euler")
    b.add_argument("--from-debruijn", dest="from_debruijn")
    b.add_argument("--from-upword", dest="from_upword")
    b.add_argument("--from-upcycle", dest="from_upcycle")
    b.add_argument("--from-word", dest="from_word", help="universal cycle / s-overlap cycle word file")
    b.add_argument("--compress-cycles", dest="compress_cycles", type=int, default=0)
    b.add_argument("-o", "--output")
    b.add_argument("--dot")

    v = sub.add_parser("verify", help="check coverage of a graph or word against a family")
    v.add_argument("-i", "--input", required=True)
    v.add_argument("--family", required=True, choices=KINDS + ("words", "perm-word"))
    v.add_argument("-n", type=int, required=True)
    v.add_argument("-s", type=int, default=None)
    v.add_argument("-f", type=int, default=1)
    v.add_argument("--order")
    v.add_argument("-o", "--output")

    c = sub.add_parser("count", help="print an exact count")
    c.add_argument("what", choices=COUNT_TARGETS)
    c.add_argument("-n", type=int, required=True)
    c.add_argument("-a", type=int, default=2)
    c.add_argument("-s", type=int, default=None)
    c.add_argument("--digraph", choices=("arc", "compressed", "perm", "debruijn"), default="arc")
    c.add_argument("--best", action="store_true", help="count De Bruijn cycles with the BEST theorem instead of enumeration")
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        if args.cmd == "build":
            return _build(args)
        if args.cmd == "verify":
            return _verify(args)
        return _count(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_GUARD
    except (GraphError, WordError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
