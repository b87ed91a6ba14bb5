from itertools import combinations

import networkx as nx
import pytest

from core.complex import delete_vertex, embed, equals, from_label_facets, is_face, link, simplex, star
from core.cutgen import (
    CutKind,
    CutSpec,
    boundary_of_simplex,
    build_cut_complex,
    cut_complex,
    cut_link,
    is_cut_face,
    is_total_cut_face,
    total_cut_complex,
)
from core.exceptions import DomainError
from core.graph import Graph, GridFamily, delete_vertices, is_simplicial_vertex, make_family, make_grid
from core.tests.conftest import random_graphs
from core.utils import bits, face_labels, mask_from_labels, mask_of


def _rows(K):
    return {"".join(face_labels(f, K.labels)) for f in K.facets}


def test_total_cut_of_g1(g1):
    assert _rows(total_cut_complex(g1, 3)) == {"146", "236", "245", "246"}


def test_total_cut_of_small_grid():
    assert _rows(total_cut_complex(make_grid(2, 3), 3)) == {"b1a2b3", "a1b2a3"}


def test_total_cut_void_and_full(k2):
    assert total_cut_complex(k2, 2).is_void
    assert total_cut_complex(k2, 3).is_void
    assert total_cut_complex(k2, 0) == simplex("xy")
    assert total_cut_complex(Graph((), ()), 0).facets == (0,)
    with pytest.raises(DomainError):
        total_cut_complex(k2, -1)


def test_cut_complex_of_g2(g2):
    assert _rows(cut_complex(g2, 3)) == {"12", "23", "34", "45", "15"}


def test_cut_complex_connected_whole_set_is_void(g2):
    assert cut_complex(g2, 5).is_void
    with pytest.raises(DomainError):
        cut_complex(g2, 1)


def test_cut_complex_facet_count_matches_networkx():
    g = make_grid(2, 3)
    nxg = g.to_networkx()
    disconnected = [
        c for c in combinations(g.labels, 4) if not nx.is_connected(nxg.subgraph(c))
    ]
    assert len(cut_complex(g, 4).facets) == len(disconnected)


def test_cut_spec_dispatch(g2):
    assert CutSpec(g2, 3, CutKind.CUT).build() == cut_complex(g2, 3)
    assert build_cut_complex(g2, 2, "total") == total_cut_complex(g2, 2)


# === MEMBERSHIP ===
def test_total_cut_membership(g1):
    assert is_total_cut_face(g1, 3, mask_from_labels("24", g1.labels))
    assert not is_total_cut_face(g1, 1, g1.vertex_mask)


def test_membership_agrees_with_complex():
    g = make_grid(2, 4)
    K = total_cut_complex(g, 2)
    C = cut_complex(g, 3)
    for face in range(1 << g.n_vertices):
        assert is_total_cut_face(g, 2, face) == is_face(K, face)
        assert is_cut_face(g, 3, face) == is_face(C, face)


# === LINKS ===
def test_cut_link_of_g1(g1):
    W = mask_from_labels("4", g1.labels)
    lk = cut_link(g1, 3, W)
    assert lk == link(total_cut_complex(g1, 3), W)
    assert _rows(lk) == {"16", "25", "26"}


def test_cut_link_edge_cases(g2):
    assert cut_link(g2, 3, 0, CutKind.CUT) == cut_complex(g2, 3)
    assert cut_link(g2, 3, mask_from_labels("123", g2.labels), CutKind.CUT).is_void


@pytest.mark.parametrize("graph", random_graphs(200, 10, seed=3))
def test_total_two_cut_equals_two_cut(graph):
    assert total_cut_complex(graph, 2) == cut_complex(graph, 2)


@pytest.mark.parametrize("graph", random_graphs(20, 8, seed=5))
@pytest.mark.parametrize("k", [2, 3])
def test_link_lemma_on_random_graphs(graph, k):
    K = total_cut_complex(graph, k)
    for W in range(1 << graph.n_vertices):
        if is_face(K, W):
            expected = embed(total_cut_complex(delete_vertices(graph, W), k), graph.labels)
            assert link(K, W) == expected
        else:
            assert cut_link(graph, k, W).is_void


# === LEMMAS ON THE GRID FAMILIES ===
LEAF_FAMILIES = [
    (family, size)
    for family in (GridFamily.G2XN_PRIME, GridFamily.G3XN1, GridFamily.G3XN2, GridFamily.H1, GridFamily.H2, GridFamily.H3)
    for size in (2, 3, 4, 5)
]


@pytest.mark.parametrize("family, size", LEAF_FAMILIES)
@pytest.mark.parametrize("k", [2, 3])
def test_simplicial_vertex_deletion(family, size, k):
    graph = make_family(family, size)
    K = total_cut_complex(graph, k)
    for v in range(graph.n_vertices):
        if not graph.adjacency[v] or not is_simplicial_vertex(graph, v):
            continue
        rest = delete_vertices(graph, 1 << v)
        nbrs = mask_from_labels(face_labels(graph.adjacency[v], graph.labels), rest.labels)
        expected = embed(star(total_cut_complex(rest, k - 1), nbrs), graph.labels)
        assert equals(delete_vertex(K, v), expected)


def test_boundary_of_simplex():
    edgeless = Graph.from_edges("abcd", [])
    assert boundary_of_simplex("abcd") == total_cut_complex(edgeless, 1)
    grid = make_grid(2, 3)
    assert total_cut_complex(grid, 1) == boundary_of_simplex(grid.labels)


def test_boundary_of_simplex_facets():
    B = boundary_of_simplex("abc")
    assert B == from_label_facets("abc", [["a", "b"], ["a", "c"], ["b", "c"]])
    assert all(len(bits(f)) == 2 for f in B.facets)
    assert mask_of(range(3)) not in B.facets
