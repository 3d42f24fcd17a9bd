import random

import networkx as nx
import pytest

from gbei.graph import SimpleGraph


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def random_graph(rng, n, p):
    return SimpleGraph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p])


def all_graphs(n):
    """Every labeled graph on n vertices (use only for tiny n)."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


@pytest.fixture
def rng():
    return random.Random(20240611)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
