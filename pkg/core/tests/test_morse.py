import pytest

from core.complex import cone, from_label_facets, simplex, skeleton
from core.cutgen import total_cut_complex
from core.exceptions import DomainError
from core.graph import GridFamily, make_family
from core.homology import reduced_betti, wedge_profile
from core.models import Wedge
from core.morse import (
    PartialMatching,
    all_faces,
    appendix_total2cut_matching,
    appendix_vertex_order,
    check_acyclic,
    critical_faces,
    element_matching_step,
    matching_report,
    morse_wedge_verdict,
    sequence_matching,
    validate_matching,
    vertices_from_labels,
)
from core.utils import mask_from_labels


def _pairs(K, *rows):
    return tuple((mask_from_labels(lo, K.labels), mask_from_labels(hi, K.labels)) for lo, hi in rows)


@pytest.fixture
def hollow_triangle():
    return skeleton(simplex("123"), 1)


# === ELEMENT MATCHINGS ===
def test_apex_matching_collapses_a_cone(pentagon):
    K = cone(pentagon)
    apex = K.labels.index("x")
    pairs, left = element_matching_step(all_faces(K), apex)
    assert not left
    assert len(pairs) == len(all_faces(pentagon))


def test_matching_step_on_partial_pool():
    pool = {0, 0b01, 0b10}
    pairs, left = element_matching_step(pool, 0)
    assert pairs == [(0, 0b01)]
    assert left == frozenset({0b10})


def test_sequence_matching_is_acyclic(pentagon, g1):
    K = total_cut_complex(g1, 3)
    for complex_, order in ((pentagon, "12345"), (K, "462135")):
        matching = sequence_matching(complex_, vertices_from_labels(complex_, order))
        assert check_acyclic(complex_, matching)


def test_repeated_vertex_adds_nothing(pentagon):
    once = sequence_matching(pentagon, [0, 1])
    twice = sequence_matching(pentagon, [0, 1, 0])
    assert once.pairs == twice.pairs


def test_unknown_vertex(pentagon):
    with pytest.raises(DomainError):
        vertices_from_labels(pentagon, ["9"])
    with pytest.raises(DomainError):
        sequence_matching(pentagon, [7])


# === ACYCLICITY ===
def test_gradient_cycle_on_hollow_triangle(hollow_triangle):
    matching = PartialMatching(hollow_triangle.labels, _pairs(hollow_triangle, ("1", "12"), ("2", "23"), ("3", "13")))
    assert not check_acyclic(hollow_triangle, matching)
    with pytest.raises(DomainError):
        morse_wedge_verdict(hollow_triangle, matching)


def test_empty_matching_is_acyclic(hollow_triangle):
    empty = PartialMatching(hollow_triangle.labels, ())
    assert check_acyclic(hollow_triangle, empty)
    critical = critical_faces(hollow_triangle, empty)
    assert {d: len(f) for d, f in critical.items()} == {-1: 1, 0: 3, 1: 3}


def test_validate_matching_errors(hollow_triangle, pentagon):
    labels = hollow_triangle.labels
    with pytest.raises(DomainError):
        validate_matching(hollow_triangle, PartialMatching(labels, _pairs(hollow_triangle, ("1", "123"))))
    with pytest.raises(DomainError):
        validate_matching(hollow_triangle, PartialMatching(labels, ((0b011, 0b111),)))
    with pytest.raises(DomainError):
        validate_matching(hollow_triangle, PartialMatching(labels, _pairs(hollow_triangle, ("1", "12"), ("1", "13"))))
    with pytest.raises(DomainError):
        validate_matching(pentagon, PartialMatching(labels, ()))


# === VERDICTS ===
def test_cone_has_no_critical_cells(pentagon):
    K = cone(pentagon)
    matching = sequence_matching(K, [K.labels.index("x")])
    assert morse_wedge_verdict(K, matching) == Wedge(count=0, dim=None)


def test_pentagon_report(pentagon):
    matching = sequence_matching(pentagon, list(range(5)))
    report = matching_report(pentagon, matching)
    assert report.acyclic
    assert report.morse_euler_ok
    assert report.weak_morse_ok
    assert report.empty_face_matched


def test_report_on_two_edges():
    K = from_label_facets("abcd", [["a", "b"], ["c", "d"]])
    report = matching_report(K, sequence_matching(K, [0, 2]))
    assert report.verdict == Wedge(count=1, dim=0)


# === TOTAL 2-CUT FAMILIES ===
def test_vertex_order_starts_at_apex():
    graph = make_family(GridFamily.G3XN1, 3)
    order = appendix_vertex_order(graph)
    assert order[0] == graph.n_vertices - 1
    assert sorted(order) == list(range(graph.n_vertices))
    assert appendix_vertex_order(graph, "increasing")[1:] == list(range(graph.n_vertices - 1))
    with pytest.raises(DomainError):
        appendix_vertex_order(graph, "random")


@pytest.mark.parametrize("m, wedge", [(3, (2, 4)), (4, (4, 7))])
def test_g3xn1_matching(m, wedge):
    matching, report = appendix_total2cut_matching("g3xn1", m)
    assert report.acyclic
    assert report.verdict.as_tuple() == wedge
    assert (report.type_one, report.type_two) == (5 * m - 7, 3 * m - 3)
    assert report.type_two_matched_down
    assert all(len(face) == 3 * m - 4 for faces in report.critical.values() for face in faces)


@pytest.mark.parametrize("m, wedge", [(3, (2, 3)), (4, (4, 6))])
def test_h1_matching(m, wedge):
    _, report = appendix_total2cut_matching(GridFamily.H1, m)
    assert report.acyclic
    assert report.verdict.as_tuple() == wedge
    assert (report.type_one, report.type_two) == (5 * m - 8, 3 * m - 4)
    assert all(len(face) == 3 * m - 5 for faces in report.critical.values() for face in faces)
    K = total_cut_complex(make_family(GridFamily.H1, m), 2)
    assert wedge_profile(reduced_betti(K, 2)).as_tuple() == wedge


@pytest.mark.parametrize("family", ["g3xn1", "h1"])
def test_smallest_member_is_contractible(family):
    _, report = appendix_total2cut_matching(family, 2)
    assert report.verdict == Wedge(count=0, dim=None)


def test_appendix_domain():
    with pytest.raises(DomainError):
        appendix_total2cut_matching("g2xn", 3)
    with pytest.raises(DomainError):
        appendix_total2cut_matching("h1", 1)
