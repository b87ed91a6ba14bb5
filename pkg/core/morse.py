"""Discrete Morse matchings on face posets, the empty face included.

Faces are bitsets; dimensions follow the reduced convention, so the empty face
sits in dimension -1. An element matching with vertex v pairs σ with σ ∪ {v}
whenever both are still unmatched.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass

import networkx as nx

from .complex import face_lists, is_face
from .cutgen import total_cut_complex
from .exceptions import DomainError
from .graph import GridFamily, delete_vertices, is_leaf, make_family
from .homology import euler_characteristic, reduced_betti
from .models import MatchingReport, Wedge
from .utils import bits, face_labels, sign

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PartialMatching:
    labels: tuple
    pairs: tuple  # (face, coface) in the order they were made

    def __len__(self):
        return len(self.pairs)

    def up(self):
        return dict(self.pairs)

    def matched(self):
        touched = set()
        for low, high in self.pairs:
            touched.add(low)
            touched.add(high)
        return touched


def all_faces(K, cap=None):
    faces = set()
    for level in face_lists(K, cap).values():
        faces.update(level)
    return faces


# === MATCHING CONSTRUCTION ===
def element_matching_step(remaining, v):
    """Pair σ with σ ∪ {v} inside `remaining`; returns (pairs, faces left unmatched)."""
    bit = 1 << v
    pool = set(remaining)
    pairs = [(face, face | bit) for face in sorted(pool) if not face & bit and face | bit in pool]
    for low, high in pairs:
        pool.discard(low)
        pool.discard(high)
    return pairs, frozenset(pool)


def sequence_matching(K, vertices, cap=None):
    """Union of the element matchings for `vertices`, applied in order. Repeated vertices add nothing."""
    remaining = frozenset(all_faces(K, cap))
    pairs = []
    for v in vertices:
        if not 0 <= v < K.n_vertices:
            raise DomainError(f"Vertex index {v} outside the universe")
        step, remaining = element_matching_step(remaining, v)
        pairs.extend(step)
    return PartialMatching(K.labels, tuple(pairs))


def vertices_from_labels(K, names):
    position = {label: i for i, label in enumerate(K.labels)}
    missing = [name for name in names if name not in position]
    if missing:
        raise DomainError(f"Unknown vertex labels {missing}")
    return [position[name] for name in names]


# === VALIDATION ===
def validate_matching(K, matching):
    if matching.labels != K.labels:
        raise DomainError("Matching and complex live on different universes")
    seen = set()
    for low, high in matching.pairs:
        extra = high & ~low
        if low & ~high or extra.bit_count() != 1:
            raise DomainError(f"Pair ({low:#x}, {high:#x}) is not a cover relation")
        if not is_face(K, high):
            raise DomainError(f"{face_labels(high, K.labels)} is not a face of the complex")
        if low in seen or high in seen:
            raise DomainError(f"Face used twice in the matching: {face_labels(low, K.labels)}")
        seen.add(low)
        seen.add(high)


def check_acyclic(K, matching):
    """No directed cycle a_1 ≺ ψ(a_1) ≻ a_2 ≺ ψ(a_2) ≻ ... ≻ a_1 in the modified Hasse diagram.

    Such cycles stay within two adjacent levels, so each level is checked on its own.
    """
    validate_matching(K, matching)
    up = matching.up()
    levels = defaultdict(list)
    for low in up:
        levels[low.bit_count()].append(low)
    for size, lows in sorted(levels.items()):
        digraph = nx.DiGraph()
        digraph.add_nodes_from(lows)
        for low in lows:
            high = up[low]
            for v in bits(high):
                other = high & ~(1 << v)
                if other != low and other in up:
                    digraph.add_edge(low, other)
        if not nx.is_directed_acyclic_graph(digraph):
            logger.debug(f"Matching has a gradient cycle between sizes {size} and {size + 1}")
            return False
    return True


def critical_faces(K, matching, cap=None):
    """Unmatched faces grouped by dimension (-1 for the empty face)."""
    matched = matching.matched()
    critical = defaultdict(list)
    for face in sorted(all_faces(K, cap)):
        if face not in matched:
            critical[face.bit_count() - 1].append(face)
    return dict(sorted(critical.items()))


def _verdict(critical):
    dims = [d for d, faces in critical.items() if faces]
    if not dims:
        return Wedge(count=0, dim=None)
    if len(dims) == 1:
        return Wedge(count=len(critical[dims[0]]), dim=dims[0])
    return None


def morse_wedge_verdict(K, matching, cap=None):
    """(count, d) when every critical cell has dimension d; (0, None) when nothing is critical."""
    if not check_acyclic(K, matching):
        raise DomainError("Matching is not acyclic")
    return _verdict(critical_faces(K, matching, cap))


def matching_report(K, matching, profile=None, cap=None):
    """Critical census plus the Morse-Euler and weak Morse checks against F_2 homology."""
    acyclic = check_acyclic(K, matching)
    critical = critical_faces(K, matching, cap)
    profile = profile if profile is not None else reduced_betti(K, 2, cap)
    counts = {d: len(faces) for d, faces in critical.items()}
    euler_ok = sum(sign(d) * c for d, c in counts.items()) == euler_characteristic(K, cap)
    weak_ok = all(counts.get(d, 0) >= b for d, b in profile.betti.items())
    if not (euler_ok and weak_ok):
        logger.warning(f"⚠️ Morse inequalities violated: euler={euler_ok}, weak={weak_ok}")
    return MatchingReport(
        labels=list(K.labels),
        pairs=len(matching),
        critical={d: [face_labels(f, K.labels) for f in faces] for d, faces in critical.items()},
        acyclic=acyclic,
        empty_face_matched=0 in matching.matched(),
        verdict=_verdict(critical) if acyclic else None,
        morse_euler_ok=euler_ok,
        weak_morse_ok=weak_ok,
    )


# === TOTAL 2-CUT COMPLEXES OF THE THIN 3-ROW FAMILIES ===
APPENDIX_FAMILIES = (GridFamily.G3XN1, GridFamily.H1)


def appendix_vertex_order(graph, order="neighbor"):
    """Apex (the leaf with the highest index) first, then the other vertices.

    "neighbor" sorts the rest by distance from the apex's neighbour in G minus the apex,
    farther ties broken towards higher indices; "increasing" uses plain index order.
    """
    apex = graph.n_vertices - 1
    if not is_leaf(graph, apex):
        raise DomainError(f"{graph.labels[apex]} is not a leaf")
    rest = list(range(apex))
    if order == "increasing":
        return [apex] + rest
    if order != "neighbor":
        raise DomainError(f"Unknown matching order {order!r}")
    root = bits(graph.adjacency[apex])[0]
    trimmed = delete_vertices(graph, 1 << apex).to_networkx()
    distance = nx.single_source_shortest_path_length(trimmed, graph.labels[root])
    far = graph.n_vertices
    return [apex] + sorted(rest, key=lambda v: (distance.get(graph.labels[v], far), -v))


def appendix_total2cut_matching(family, m, order="neighbor", cap=None):
    """Element matching sequence on the total 2-cut complex of G^(1)_{3×m} or H_1(m).

    The report also carries the census of faces left after the apex step: Type I
    faces have |V|-3 vertices, Type II faces |V|-2.
    """
    family = GridFamily(family)
    if family not in APPENDIX_FAMILIES:
        raise DomainError(f"Appendix matching is defined for g3xn1 and h1, not {family.value}")
    if m < 2:
        raise DomainError(f"Appendix matching needs m >= 2, got {m}")
    graph = make_family(family, m)
    K = total_cut_complex(graph, 2)
    sequence = appendix_vertex_order(graph, order)

    remaining = frozenset(all_faces(K, cap))
    pairs, remaining = element_matching_step(remaining, sequence[0])
    size = graph.n_vertices
    type_one = {f for f in remaining if f.bit_count() == size - 3}
    type_two = {f for f in remaining if f.bit_count() == size - 2}
    logger.info(f"{family.value} m={m}: after the apex step {len(type_one)} Type I, {len(type_two)} Type II")

    later = []
    for v in sequence[1:]:
        step, remaining = element_matching_step(remaining, v)
        later.extend(step)
    matching = PartialMatching(K.labels, tuple(pairs + later))
    down = {high: low for low, high in later}
    matched_down = all(down.get(y) in type_one for y in type_two)

    report = matching_report(K, matching, cap=cap).model_copy(
        update={
            "type_one": len(type_one),
            "type_two": len(type_two),
            "type_two_matched_down": matched_down,
        }
    )
    return matching, report
