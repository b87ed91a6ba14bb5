from itertools import combinations

import networkx as nx
import pytest

from core.exceptions import CapacityError, DomainError
from core.graph import (
    Graph,
    GridFamily,
    delete_vertices,
    enumerate_independent_sets,
    family_from_spec,
    induced_subgraph,
    is_connected_subset,
    is_independent,
    is_leaf,
    is_simplicial_vertex,
    make_family,
    make_grid,
    parse_family,
)
from core.tests.conftest import random_graphs
from core.utils import face_labels, mask_from_labels, mask_of


def _names(graph, masks):
    return {"".join(face_labels(m, graph.labels)) for m in masks}


# === GRIDS ===
def test_grid_labels_are_column_major():
    g = make_grid(2, 3)
    assert g.labels == ("a1", "b1", "a2", "b2", "a3", "b3")
    assert len(g.edges()) == 7


def test_grid_matches_networkx_grid():
    assert nx.is_isomorphic(make_grid(3, 4).to_networkx(), nx.grid_2d_graph(3, 4))


@pytest.mark.parametrize("m, n", [(0, 3), (2, 0)])
def test_grid_rejects_empty_sizes(m, n):
    with pytest.raises(DomainError):
        make_grid(m, n)


def test_grid_over_word_size():
    with pytest.raises(CapacityError):
        make_grid(5, 13)


@pytest.mark.parametrize(
    "family, size, count",
    [
        (GridFamily.G2XN, 4, 8),
        (GridFamily.G2XN_PRIME, 3, 7),
        (GridFamily.G3XN, 3, 9),
        (GridFamily.G3XN_PRIME, 3, 11),
        (GridFamily.G3XN1, 3, 8),
        (GridFamily.G3XN2, 3, 7),
        (GridFamily.H1, 3, 7),
        (GridFamily.H2, 3, 4),
        (GridFamily.H3, 3, 5),
    ],
)
def test_family_sizes(family, size, count):
    assert make_family(family, size).n_vertices == count


def test_g3xn1_is_induced_subgraph_of_grid():
    grid = make_grid(3, 3)
    removed = mask_from_labels(["a2", "b2", "a3", "b3"], grid.labels)
    assert induced_subgraph(grid, grid.vertex_mask & ~removed) == make_family(GridFamily.G3XN1, 2)


def test_g3xn2_drops_last_a_and_b():
    grid = make_grid(3, 4)
    expected = delete_vertices(grid, mask_from_labels(["a4", "b4"], grid.labels))
    assert make_family(GridFamily.G3XN2, 4) == expected


def test_family_size_floor():
    with pytest.raises(DomainError):
        make_family(GridFamily.H2, 1)


# === SPECIFIERS ===
@pytest.mark.parametrize(
    "spec, family, sizes",
    [
        ("g2xn:5", GridFamily.G2XN, (5,)),
        ("g2xn':4", GridFamily.G2XN_PRIME, (4,)),
        ("H1:3", GridFamily.H1, (3,)),
        ("grid:4x5", GridFamily.GRID, (4, 5)),
    ],
)
def test_parse_family(spec, family, sizes):
    assert parse_family(spec) == (family, sizes)


@pytest.mark.parametrize("spec", ["", "g2xn", "g9xn:3", "grid:4", "h1:3x3", "g2xn:-1"])
def test_parse_family_rejects(spec):
    with pytest.raises(DomainError):
        parse_family(spec)


def test_family_from_spec_builds_grid():
    assert family_from_spec("grid:2x3") == make_grid(2, 3)


# === SUBGRAPHS ===
def test_induced_subgraph_identity_and_empty(g1):
    assert induced_subgraph(g1, g1.vertex_mask) == g1
    empty = induced_subgraph(g1, 0)
    assert empty.n_vertices == 0 and empty.edges() == []


def test_induced_subgraph_nests():
    g = make_grid(3, 3)
    outer = mask_from_labels(["a1", "b1", "c1", "a2", "b2", "c3"], g.labels)
    inner = mask_from_labels(["a1", "b1", "b2"], g.labels)
    first = induced_subgraph(g, outer)
    assert induced_subgraph(first, mask_from_labels(["a1", "b1", "b2"], first.labels)) == induced_subgraph(g, inner)


def test_induced_subgraph_outside():
    with pytest.raises(DomainError):
        induced_subgraph(make_grid(2, 2), 1 << 7)


# === PREDICATES ===
def test_is_independent(g1, k2):
    assert is_independent(g1, mask_from_labels("135", g1.labels))
    assert is_independent(g1, mask_from_labels("2", g1.labels))
    assert not is_independent(k2, k2.vertex_mask)


def test_independent_sets_of_g1(g1):
    assert _names(g1, enumerate_independent_sets(g1, 3)) == {"135", "136", "145", "235"}


def test_independent_sets_of_small_grid():
    g = make_grid(2, 3)
    assert _names(g, enumerate_independent_sets(g, 3)) == {"a1b2a3", "b1a2b3"}


def test_independent_sets_sorted_and_empty(k2):
    g = make_grid(2, 4)
    found = enumerate_independent_sets(g, 2)
    assert found == sorted(found)
    assert enumerate_independent_sets(k2, 2) == []
    with pytest.raises(DomainError):
        enumerate_independent_sets(k2, 3)


@pytest.mark.parametrize("graph", random_graphs(15, 9, seed=7))
def test_independent_sets_match_brute_force(graph):
    for k in range(graph.n_vertices + 1):
        brute = [
            mask_of(c) for c in combinations(range(graph.n_vertices), k) if is_independent(graph, mask_of(c))
        ]
        assert enumerate_independent_sets(graph, k) == sorted(brute)


def test_connectivity(g2, path3):
    assert not is_connected_subset(g2, mask_from_labels("123", g2.labels))
    assert is_connected_subset(g2, mask_from_labels("4", g2.labels))
    assert not is_connected_subset(path3, mask_from_labels("ac", path3.labels))
    with pytest.raises(DomainError):
        is_connected_subset(g2, 0)


@pytest.mark.parametrize("graph", random_graphs(10, 8, seed=11))
def test_connectivity_matches_networkx(graph):
    nxg = graph.to_networkx()
    for subset in range(1, 1 << graph.n_vertices):
        names = face_labels(subset, graph.labels)
        assert is_connected_subset(graph, subset) == nx.is_connected(nxg.subgraph(names))


def test_simplicial_and_leaf():
    prime = make_family(GridFamily.G2XN_PRIME, 3)
    a4 = prime.index("a4")
    assert is_leaf(prime, a4) and is_simplicial_vertex(prime, a4)
    grid = make_grid(2, 3)
    assert not is_simplicial_vertex(grid, grid.index("a1"))

    lonely = Graph.from_edges("xyz", [("x", "y")])
    z = lonely.index("z")
    assert not is_leaf(lonely, z)
    assert is_simplicial_vertex(lonely, z)


def test_neighbors_out_of_range(k2):
    with pytest.raises(DomainError):
        k2.neighbors(5)


# === INTERCHANGE ===
def test_networkx_round_trip(g2):
    assert Graph.from_networkx(g2.to_networkx()) == g2


def test_from_edges_rejects_unknown_endpoint():
    with pytest.raises(DomainError):
        Graph.from_edges("ab", [("a", "q")])


def test_dot_export_lists_edges():
    dot = make_grid(2, 2).to_dot(name="g")
    assert "a1 -- b1" in dot
    assert "a1 -- a2" in dot
