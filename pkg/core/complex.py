"""Simplicial complexes stored as facet bitsets over a labelled vertex universe.

The void complex has no facets at all; the complex {∅} has the single facet 0.
Facets are always inclusion-maximal and sorted by bitset value, so two complexes
on the same universe are equal exactly when their dataclasses compare equal.
"""
import logging
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .exceptions import DomainError
from .utils import (
    bits,
    check_enumeration_cap,
    check_word_size,
    face_labels,
    format_face,
    full_mask,
    is_subset,
    mask_from_labels,
    mask_of,
    maximalize,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimplicialComplex:
    labels: tuple
    facets: tuple

    @property
    def n_vertices(self):
        return len(self.labels)

    @property
    def is_void(self):
        return not self.facets

    def __str__(self):
        if self.is_void:
            return "void"
        return "<" + ", ".join(format_face(f, self.labels) for f in self.facets) + ">"

    def facet_labels(self):
        return [face_labels(f, self.labels) for f in self.facets]


def _check_face(labels, face):
    if face < 0 or not is_subset(face, full_mask(len(labels))):
        raise DomainError(f"Face {face:#x} lies outside the {len(labels)}-vertex universe")


def _same_universe(first, second):
    if first.labels != second.labels:
        raise DomainError("Complexes live on different vertex universes")


# === CONSTRUCTION ===
def from_facets(labels, faces):
    """Complex generated by `faces` (bitsets); subsumed and repeated faces are dropped."""
    labels = tuple(labels)
    check_word_size(len(labels))
    faces = list(faces)
    for face in faces:
        _check_face(labels, face)
    return SimplicialComplex(labels, maximalize(faces))


def from_label_facets(labels, facets):
    """Like from_facets, with every face given as an iterable of labels."""
    labels = tuple(labels)
    return from_facets(labels, [mask_from_labels(face, labels) for face in facets])


def simplex(labels, face=None):
    """The full simplex <face>; the whole universe when `face` is omitted."""
    labels = tuple(labels)
    return from_facets(labels, [full_mask(len(labels)) if face is None else face])


def void(labels):
    return SimplicialComplex(tuple(labels), ())


def empty_face_complex(labels):
    """The complex {∅}."""
    return SimplicialComplex(tuple(labels), (0,))


# === QUERIES ===
def is_face(K, face):
    _check_face(K.labels, face)
    return any(is_subset(face, f) for f in K.facets)


def dimension(K):
    if K.is_void:
        raise DomainError("The void complex has no dimension")
    return max(f.bit_count() for f in K.facets) - 1


def is_pure(K):
    return len({f.bit_count() for f in K.facets}) <= 1


def vertex_support(K):
    """Bitset of the vertices that occur in some face."""
    support = 0
    for f in K.facets:
        support |= f
    return support


# === SUBCOMPLEXES ===
def link(K, face):
    if not is_face(K, face):
        raise DomainError(f"{format_face(face, K.labels)} is not a face, its link is undefined")
    return SimplicialComplex(K.labels, maximalize(f & ~face for f in K.facets if is_subset(face, f)))


def delete_face(K, face):
    """All faces of K that do not contain `face`."""
    _check_face(K.labels, face)
    kept = []
    for f in K.facets:
        if not is_subset(face, f):
            kept.append(f)
        else:
            kept.extend(f & ~(1 << v) for v in bits(face))
    return SimplicialComplex(K.labels, maximalize(kept))


def delete_vertex(K, v):
    return delete_face(K, 1 << v)


def star(K, face):
    """Closed star; void when `face` is not a face of K."""
    _check_face(K.labels, face)
    return SimplicialComplex(K.labels, tuple(f for f in K.facets if is_subset(face, f)))


def skeleton(K, d):
    if d < -1:
        raise DomainError(f"Skeleton dimension must be >= -1, got {d}")
    pieces = []
    for f in K.facets:
        if f.bit_count() <= d + 1:
            pieces.append(f)
        else:
            pieces.extend(mask_of(c) for c in combinations(bits(f), d + 1))
    return SimplicialComplex(K.labels, maximalize(pieces))


# === PRODUCTS ===
def _fresh(K, label):
    if label in K.labels:
        raise DomainError(f"Apex {label!r} already belongs to the universe")


def cone(K, apex="x"):
    _fresh(K, apex)
    labels = K.labels + (apex,)
    check_word_size(len(labels))
    top = 1 << len(K.labels)
    return SimplicialComplex(labels, tuple(f | top for f in K.facets))


def suspension(K, apexes=("x", "y")):
    north, south = apexes
    if north == south:
        raise DomainError("Suspension apexes must differ")
    _fresh(K, north)
    _fresh(K, south)
    labels = K.labels + (north, south)
    check_word_size(len(labels))
    n = len(K.labels)
    return from_facets(labels, [f | (1 << n) for f in K.facets] + [f | (1 << (n + 1)) for f in K.facets])


def join(first, second):
    """Join of complexes on disjoint label sets; the universe is first's labels then second's."""
    if set(first.labels) & set(second.labels):
        raise DomainError("Join needs disjoint vertex universes")
    labels = first.labels + second.labels
    check_word_size(len(labels))
    shift = len(first.labels)
    return from_facets(labels, [f | (g << shift) for f in first.facets for g in second.facets])


# === SET OPERATIONS ===
def intersect(first, second):
    _same_universe(first, second)
    return SimplicialComplex(first.labels, maximalize(f & g for f in first.facets for g in second.facets))


def union(first, second):
    _same_universe(first, second)
    return SimplicialComplex(first.labels, maximalize(first.facets + second.facets))


def equals(first, second):
    _same_universe(first, second)
    return first.facets == second.facets


def is_subcomplex(first, second):
    _same_universe(first, second)
    return all(any(is_subset(f, g) for g in second.facets) for f in first.facets)


def embed(K, labels):
    """Relabel K into the universe `labels`, matching vertices by label."""
    labels = tuple(labels)
    position = {label: i for i, label in enumerate(labels)}
    missing = [label for label in K.labels if label not in position]
    if missing:
        raise DomainError(f"Target universe lacks vertices {missing}")
    moved = [mask_of(position[K.labels[v]] for v in bits(f)) for f in K.facets]
    return SimplicialComplex(labels, maximalize(moved))


# === ENUMERATION ===
def enumerate_faces(K, cap=None):
    """Every face of K grouped by dimension: {dim: sorted uint64 array}.

    Faces are produced level by level, dropping one vertex at a time from the
    faces one size up and merging in the facets of the current size.
    """
    check_enumeration_cap(K.n_vertices, cap)
    if K.is_void:
        return {}
    sizes = np.array([f.bit_count() for f in K.facets])
    stored = np.array(K.facets, dtype=np.uint64)
    by_dim = {}
    current = np.empty(0, dtype=np.uint64)
    for size in range(int(sizes.max()), -1, -1):
        current = np.unique(np.concatenate([current, stored[sizes == size]]))
        by_dim[size - 1] = current
        if size == 0:
            break
        children = []
        for b in range(K.n_vertices):
            bit = np.uint64(1 << b)
            children.append(current[(current & bit) != 0] & ~bit)
        current = np.unique(np.concatenate(children)) if children else np.empty(0, dtype=np.uint64)
    logger.debug(f"Enumerated {sum(len(v) for v in by_dim.values())} faces on {K.n_vertices} vertices")
    return dict(sorted(by_dim.items()))


def face_lists(K, cap=None):
    """enumerate_faces with plain int lists."""
    return {d: [int(x) for x in arr] for d, arr in enumerate_faces(K, cap).items()}


def all_faces_by_dim(K, cap=None):
    """Census {dim: count}, dimension -1 for the empty face."""
    return {d: int(len(arr)) for d, arr in enumerate_faces(K, cap).items()}


def face_count(K, cap=None):
    return sum(all_faces_by_dim(K, cap).values())
