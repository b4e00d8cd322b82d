import itertools
import random
import sys

import pytest

from sierpinski_codes.graph import Graph


def rule_adjacent(a, b):
    """Adjacency straight from the labelling rule, kept apart from the package."""
    n = len(a)
    for h in range(n):
        if a[h] != b[h]:
            return all(a[t] == b[h] and b[t] == a[h] for t in range(h + 1, n))
    return False


def enumerated_edges(n, k):
    """All label pairs (as ids) accepted by the rule, by brute enumeration."""
    labels = list(itertools.product(range(k), repeat=n))
    index = {lab: i for i, lab in enumerate(labels)}
    return sorted((index[a], index[b]) for a, b in itertools.combinations(labels, 2)
                  if rule_adjacent(a, b))


def random_connected_graph(rng: random.Random, max_vertices=12, min_vertices=2) -> Graph:
    v = rng.randint(min_vertices, max_vertices)
    p = rng.uniform(0.15, 0.7)
    while True:
        order = list(range(v))
        rng.shuffle(order)
        # random spanning tree plus extra edges
        edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, v)}
        edges |= {(a, b) for a, b in itertools.combinations(range(v), 2) if rng.random() < p}
        g = Graph(v, edges)
        if g.is_connected():
            return g


@pytest.fixture
def rng():
    return random.Random(20240617)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        passed, detail = mod.RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
