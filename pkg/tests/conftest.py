from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cliquereg import families
from cliquereg.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph(len(index), tuple(sorted((min(index[u], index[v]), max(index[u], index[v])) for u, v in h.edges())))


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 10, connected: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # a random spanning tree keeps the graph connected
        parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
        chosen = set(chosen) | {(p, v) for v, p in zip(range(1, n), parents)}
    return Graph(n, tuple(chosen))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    return Graph(n, tuple(edges))


@pytest.fixture(scope="session")
def rook9() -> Graph:
    return families.rook_graph(3)


@pytest.fixture(scope="session")
def gq22_graph() -> Graph:
    return families.collinearity_graph(families.gq22())


@pytest.fixture(scope="session")
def t5() -> Graph:
    return families.triangular_graph(5)


@pytest.fixture(scope="session")
def bh() -> Graph:
    return families.brouwer_haemers_graph()


# (name, builder, omega) for the clique regular corpus
CORPUS = [
    ("rook9", lambda: families.rook_graph(3), 3),
    ("rook16", lambda: families.rook_graph(4), 4),
    ("T5", lambda: families.triangular_graph(5), 4),
    ("T6", lambda: families.triangular_graph(6), 5),
    ("GQ22", lambda: families.collinearity_graph(families.gq22()), 3),
    ("GQ24", families.gq24_graph, 3),
]


# one verdict line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":").split("-")[0])):
            terminalreporter.write_line(line)
