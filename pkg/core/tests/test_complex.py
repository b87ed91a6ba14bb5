import pytest

from core.complex import (
    all_faces_by_dim,
    cone,
    delete_face,
    delete_vertex,
    dimension,
    embed,
    empty_face_complex,
    enumerate_faces,
    equals,
    face_count,
    face_lists,
    from_facets,
    from_label_facets,
    intersect,
    is_face,
    is_pure,
    is_subcomplex,
    join,
    link,
    simplex,
    skeleton,
    star,
    suspension,
    union,
    vertex_support,
    void,
)
from core.exceptions import CapacityError, DomainError
from core.utils import mask_from_labels

LABELS = "123456"


@pytest.fixture
def delta():
    """The total 3-cut complex of g1, written out by hand."""
    return from_label_facets(LABELS, [list("146"), list("236"), list("245"), list("246")])


def _m(names, labels=LABELS):
    return mask_from_labels(names, labels)


def _facets(*rows, labels=LABELS):
    return tuple(sorted(_m(r, labels) for r in rows))


def test_from_facets_keeps_maximal(delta):
    assert len(delta.facets) == 4
    assert dimension(delta) == 2
    K = from_facets(LABELS, [_m("123"), _m("12"), _m("123")])
    assert K.facets == (_m("123"),)


def test_from_facets_empty_input_is_void():
    K = from_facets(LABELS, [])
    assert K.is_void
    assert str(K) == "void"
    with pytest.raises(DomainError):
        dimension(K)


def test_void_and_empty_face_differ():
    assert void("ab") != empty_face_complex("ab")
    assert is_face(empty_face_complex("ab"), 0)
    assert not is_face(void("ab"), 0)


def test_face_outside_universe():
    with pytest.raises(DomainError):
        from_facets("ab", [0b100])


def test_is_face(delta):
    assert is_face(delta, _m("24"))
    assert not is_face(delta, _m("13"))


def test_purity(pentagon):
    assert is_pure(pentagon)
    assert dimension(pentagon) == 1
    assert not is_pure(from_label_facets("abc", [["a", "b"], ["c"]]))


# === SUBCOMPLEXES ===
def test_link_of_vertex(delta):
    assert link(delta, _m("4")).facets == _facets("16", "25", "26")


def test_link_edge_cases(delta):
    assert link(delta, 0) == delta
    edge = simplex("xy")
    assert link(edge, edge.facets[0]) == empty_face_complex("xy")
    with pytest.raises(DomainError):
        link(delta, _m("13"))


def test_delete_vertex(delta):
    assert delete_vertex(delta, LABELS.index("4")).facets == _facets("236", "16", "25")


def test_delete_face_edge_cases(delta):
    assert delete_face(delta, 0).is_void
    edge = simplex("xyz", _m("xy", "xyz"))
    assert delete_vertex(edge, 2) == edge


def test_delete_face_keeps_faces_meeting_it():
    triangle = simplex("abc")
    assert delete_face(triangle, _m("ab", "abc")).facets == _facets("ac", "bc", labels="abc")


def test_star(delta):
    assert star(delta, _m("4")).facets == _facets("146", "245", "246")
    assert star(delta, 0) == delta
    assert star(delta, _m("13")).is_void


def test_star_is_link_joined_with_face(delta):
    for face in face_lists(delta)[1]:
        joined = {f | face for f in link(delta, face).facets}
        assert joined == set(star(delta, face).facets)


def test_skeleton(triangle):
    assert len(skeleton(triangle, 1).facets) == 3
    assert len(skeleton(simplex("1234"), 1).facets) == 6
    assert skeleton(triangle, 2) == triangle
    assert skeleton(triangle, -1) == empty_face_complex("123")
    with pytest.raises(DomainError):
        skeleton(triangle, -2)


# === PRODUCTS ===
def test_join_of_points():
    assert join(simplex("a"), simplex("b")) == simplex("ab")


def test_join_needs_disjoint_universes():
    with pytest.raises(DomainError):
        join(simplex("ab"), simplex("bc"))


def test_suspension_of_two_points(two_points):
    S = suspension(two_points)
    assert len(S.facets) == 4
    assert dimension(S) == 1


def test_suspension_triples_faces(pentagon):
    assert face_count(suspension(pentagon)) == 3 * face_count(pentagon)


def test_cone_apex_collision(pentagon):
    with pytest.raises(DomainError):
        cone(pentagon, apex="3")
    assert vertex_support(cone(pentagon)) == (1 << 6) - 1


# === SET OPERATIONS ===
def test_intersect_union_equals(delta):
    a = simplex("123", _m("12", "123"))
    b = simplex("123", _m("23", "123"))
    assert intersect(a, b).facets == (_m("2", "123"),)
    assert intersect(delta, delta) == delta
    assert equals(union(a, b), from_label_facets("123", [["1", "2"], ["2", "3"]]))
    assert is_subcomplex(intersect(a, b), a)
    assert not is_subcomplex(a, b)


def test_universe_mismatch(delta, pentagon):
    with pytest.raises(DomainError):
        intersect(delta, pentagon)
    with pytest.raises(DomainError):
        equals(delta, pentagon)


def test_embed_by_label():
    small = from_label_facets("ba", [["a"]])
    big = embed(small, "abc")
    assert big.facets == (1,)
    with pytest.raises(DomainError):
        embed(small, "bc")


# === ENUMERATION ===
def test_census_of_pentagon(pentagon):
    assert all_faces_by_dim(pentagon) == {-1: 1, 0: 5, 1: 5}


def test_enumeration_of_small_complexes():
    assert enumerate_faces(void("ab")) == {}
    assert face_lists(empty_face_complex("ab")) == {-1: [0]}
    assert face_count(simplex("abcd")) == 16


def test_faces_are_sorted(delta):
    for faces in face_lists(delta).values():
        assert faces == sorted(faces)


def test_enumeration_cap(pentagon):
    with pytest.raises(CapacityError):
        enumerate_faces(pentagon, cap=3)
