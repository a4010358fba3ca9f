from itertools import combinations

import pytest
from hypothesis import strategies as st

from gucycles.io import load_fixture
from gucycles.ordered_graph import OrderedPartialGraph


@st.composite
def partial_graphs(draw, min_n=1, max_n=7, cyclic=False, max_dist=None, diamonds=True):
    """Random ordered partial graphs with disjoint diamond groups."""
    n = draw(st.integers(min_n, max_n))
    ps = [p for p in combinations(range(1, n + 1), 2) if max_dist is None or p[1] - p[0] <= max_dist]
    status = draw(st.lists(st.integers(0, 4 if diamonds else 1), min_size=len(ps), max_size=len(ps)))
    edges = frozenset(p for p, s in zip(ps, status) if s == 1)
    groups: dict[int, set] = {}
    for p, s in zip(ps, status):
        if s >= 2:
            groups.setdefault(s, set()).add(p)
    return OrderedPartialGraph(n, edges, tuple(frozenset(g) for _, g in sorted(groups.items())), cyclic)


def random_joined(rng, m, n, s, diamonds=True):
    """A graph on m+n-s vertices with no pair joining the first m-s to the last n-s vertices.

    Diamond groups stay inside one of the two pieces so gluing the pieces back
    gives exactly this graph.
    """
    size = m + n - s
    ranges = [(1, m), (m - s + 1, size)]
    ps = [p for p in combinations(range(1, size + 1), 2) if p[0] > m - s or p[1] <= m]
    edges, groups = set(), {}
    for p in ps:
        r = rng.random()
        if r < 0.4:
            edges.add(p)
        elif diamonds and r < 0.6:
            inside = [k for k, (lo, hi) in enumerate(ranges) if lo <= p[0] and p[1] <= hi]
            k = rng.choice(inside)
            groups.setdefault((k, rng.randrange(2)), set()).add(p)
    return OrderedPartialGraph(size, frozenset(edges), tuple(frozenset(g) for g in groups.values()))


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def fixture():
    def get(name):
        return load_fixture(name)[0]

    return get
