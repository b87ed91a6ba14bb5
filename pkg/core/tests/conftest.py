import random

import networkx as nx
import pytest

from core.complex import from_label_facets, simplex
from core.graph import Graph


@pytest.fixture
def g1():
    """Six vertices, a triangle 2-4-6 with pendant edges 12, 34, 56."""
    return Graph.from_edges("123456", [("1", "2"), ("3", "4"), ("5", "6"), ("2", "4"), ("2", "6"), ("4", "6")])


@pytest.fixture
def g2():
    """The 5-cycle 1-3-5-2-4-1."""
    return Graph.from_edges("12345", [("1", "3"), ("1", "4"), ("2", "4"), ("2", "5"), ("3", "5")])


@pytest.fixture
def k2():
    return Graph.from_edges("xy", [("x", "y")])


@pytest.fixture
def path3():
    return Graph.from_edges("abc", [("a", "b"), ("b", "c")])


@pytest.fixture
def pentagon():
    return from_label_facets("12345", [["1", "2"], ["2", "3"], ["3", "4"], ["4", "5"], ["1", "5"]])


@pytest.fixture
def triangle():
    return simplex("123")


@pytest.fixture
def two_points():
    return from_label_facets("pq", [["p"], ["q"]])


def random_graphs(count, max_vertices, seed, p=0.4):
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(3, max_vertices)
        g = nx.gnp_random_graph(n, p, seed=rng.randint(0, 10**6))
        graphs.append(Graph.from_networkx(nx.relabel_nodes(g, {v: f"v{v}" for v in g.nodes})))
    return graphs
