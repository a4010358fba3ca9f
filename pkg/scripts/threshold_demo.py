"""Threshold graph gucycles from every binary De Bruijn cycle, and gupwords from the diamond upword."""

import argparse

from gucycles.constructions import threshold_gucycle_from_db, threshold_gupword_from_upword
from gucycles.families import FamilyDescriptor
from gucycles.verify import verify_graph_cover
from gucycles.words import enumerate_de_bruijn, upword_diamond


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cycles", type=int, nargs="+", default=[4, 5])
    ap.add_argument("--words", type=int, default=10, help="largest n for gupwords")
    args = ap.parse_args()
    for n in args.cycles:
        fam = FamilyDescriptor("threshold", n)
        words = enumerate_de_bruijn(2, n - 1)
        verdicts = [verify_graph_cover(threshold_gucycle_from_db(w, n), fam).verdict for w in words]
        print(f"gucycles n={n}: {len(words)} De Bruijn inputs, {verdicts.count('exact')} exact, length {2 ** (n - 1)}")
    for n in range(3, args.words + 1):
        w = upword_diamond(n - 1)
        g = threshold_gupword_from_upword(w, n)
        rep = verify_graph_cover(g, FamilyDescriptor("threshold", n))
        print(f"gupword n={n:2d}: from {w} -> {g.n} vertices, {len(rep.hits)} members, {rep.verdict}")


if __name__ == "__main__":
    main()
