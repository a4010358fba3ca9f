"""Permutation graph gucycles, gupcycles and s-gocycles, each checked by the verifier."""

import argparse
import time
from math import factorial

from gucycles.constructions import perm_gucycle, perm_gucycle_direct, perm_gupcycle, sgocycle, sgocycle_exists
from gucycles.families import FamilyDescriptor
from gucycles.verify import verify_graph_cover


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=4)
    args = ap.parse_args()
    n = args.n
    fam = FamilyDescriptor("permutation", n)
    for word in ([1, 2, 4, 3, 2, 4], [2, 5, 6, 4, 1, 3]):
        g = perm_gucycle(3, word)
        same = g == perm_gucycle_direct(word, 3)
        print(f"gucycle from {''.join(map(str, word))}: {verify_graph_cover(g, FamilyDescriptor('permutation', 3)).verdict}, tour route == direct formula: {same}")
    for i in range(factorial(n - 2) + 1):
        g = perm_gupcycle(n, i)
        print(f"gupcycle n={n} i={i}: length {g.n}, {len(g.diamond_groups)} diamonds, {verify_graph_cover(g, fam).verdict}")
    for m in range(3, n + 2):
        for s in range(1, m):
            if not sgocycle_exists(m, s) or factorial(m) * (m - s) > 2000:
                continue
            t0 = time.perf_counter()
            g = sgocycle(m, s)
            rep = verify_graph_cover(g, FamilyDescriptor("permutation", m, s))
            print(f"{s}-gocycle n={m}: {g.n} vertices, {rep.verdict} ({time.perf_counter() - t0:.2f}s)")


if __name__ == "__main__":
    main()
