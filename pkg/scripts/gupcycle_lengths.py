"""Build and verify a labeled gupcycle of every achievable length for n = 3 and n = 4."""

import argparse
import time

from gucycles.constructions import labeled_gupcycle, labeled_length_ranges
from gucycles.families import FamilyDescriptor
from gucycles.verify import verify_graph_cover


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, nargs="+", default=[3, 4])
    args = ap.parse_args()
    for n in args.n:
        (a, b), (c, d) = labeled_length_ranges(n)
        lengths = sorted(set(range(a, b + 1)) | set(range(c, d + 1)))
        t0 = time.perf_counter()
        bad = []
        print(f"n={n}: lengths {a}..{b} and {c}..{d}")
        for length in lengths:
            g = labeled_gupcycle(n, length)
            rep = verify_graph_cover(g, FamilyDescriptor("labeled", n))
            pairs = sum(len(grp) for grp in g.diamond_groups)
            print(f"  length={length:3d} diamond_groups={len(g.diamond_groups):3d} diamond_pairs={pairs:3d} {rep.verdict}")
            if not rep.exact:
                bad.append(length)
        print(f"n={n}: {len(lengths) - len(bad)}/{len(lengths)} exact in {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
