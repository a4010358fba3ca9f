"""Count De Bruijn cycles three ways: backtracking, closed formula, and the BEST theorem."""

import argparse

from gucycles.euler import Multidigraph, count_euler_tours
from gucycles.words import de_bruijn_count, de_bruijn_cycle, de_bruijn_graph, enumerate_de_bruijn


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cases", nargs="+", default=["2:2", "2:3", "2:4", "3:2"], help="a:n pairs")
    args = ap.parse_args()
    print(f"{'a':>2} {'n':>2} {'enumerated':>10} {'formula':>8} {'BEST':>6}  least cycle")
    for case in args.cases:
        a, n = (int(x) for x in case.split(":"))
        verts, tails, heads, _ = de_bruijn_graph(a, n)
        best = count_euler_tours(Multidigraph.from_arcs(len(verts), zip(tails, heads)))
        found = len(enumerate_de_bruijn(a, n))
        print(f"{a:>2} {n:>2} {found:>10} {de_bruijn_count(a, n):>8} {best:>6}  {de_bruijn_cycle(a, n)}")


if __name__ == "__main__":
    main()
