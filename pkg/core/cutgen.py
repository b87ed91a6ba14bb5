import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .complex import SimplicialComplex, embed, from_facets, void
from .exceptions import DomainError
from .graph import Graph, delete_vertices, enumerate_independent_sets, is_connected_subset
from .utils import bits, full_mask, is_subset, lowest_bit, mask_of

logger = logging.getLogger(__name__)


class CutKind(Enum):
    TOTAL = "total"
    CUT = "cut"


@dataclass(frozen=True)
class CutSpec:
    graph: Graph
    k: int
    kind: CutKind = CutKind.TOTAL

    def build(self):
        if self.kind is CutKind.TOTAL:
            return total_cut_complex(self.graph, self.k)
        return cut_complex(self.graph, self.k)


def total_cut_complex(graph, k):
    """Facets are the complements of the independent k-sets.

    k = 0 gives the full simplex on V(G), which is {∅} for the empty graph.
    """
    if k < 0:
        raise DomainError(f"Total cut complex needs k >= 0, got {k}")
    everything = graph.vertex_mask
    if k > graph.n_vertices:
        return void(graph.labels)
    complements = [everything & ~s for s in enumerate_independent_sets(graph, k)]
    logger.debug(f"Total {k}-cut complex: {len(complements)} facets on {graph.n_vertices} vertices")
    return from_facets(graph.labels, complements)


def _disconnected(graph, subset):
    return subset != 0 and not is_connected_subset(graph, subset)


def cut_complex(graph, k):
    """Facets are the complements of the k-sets inducing a disconnected subgraph."""
    if k < 2:
        raise DomainError(f"Cut complex needs k >= 2, got {k}")
    everything = graph.vertex_mask
    complements = [
        everything & ~s
        for s in (mask_of(c) for c in combinations(range(graph.n_vertices), k))
        if _disconnected(graph, s)
    ]
    logger.debug(f"{k}-cut complex: {len(complements)} facets on {graph.n_vertices} vertices")
    return from_facets(graph.labels, complements)


def build_cut_complex(graph, k, kind=CutKind.TOTAL):
    return CutSpec(graph, k, CutKind(kind)).build()


# === MEMBERSHIP ===
def _has_independent_subset(graph, candidates, need):
    if need == 0:
        return True
    while candidates.bit_count() >= need:
        v = lowest_bit(candidates)
        candidates &= ~(1 << v)
        if _has_independent_subset(graph, candidates & ~graph.adjacency[v], need - 1):
            return True
    return False


def is_total_cut_face(graph, k, face):
    """σ is a face iff V∖σ holds an independent k-set."""
    if not is_subset(face, graph.vertex_mask):
        raise DomainError("Face is not contained in the vertex set")
    return _has_independent_subset(graph, graph.vertex_mask & ~face, k)


def is_cut_face(graph, k, face):
    """σ is a face iff V∖σ holds a k-set inducing a disconnected subgraph."""
    if k < 2:
        raise DomainError(f"Cut complex needs k >= 2, got {k}")
    if not is_subset(face, graph.vertex_mask):
        raise DomainError("Face is not contained in the vertex set")
    rest = bits(graph.vertex_mask & ~face)
    return any(_disconnected(graph, mask_of(c)) for c in combinations(rest, k))


def cut_link(graph, k, removed, kind=CutKind.TOTAL):
    """The complex of G∖W, placed in G's universe; void when W is not a face.

    For a face W this is the link of W in the cut complex of G.
    """
    kind = CutKind(kind)
    if not is_subset(removed, graph.vertex_mask):
        raise DomainError("W is not contained in the vertex set")
    member = is_total_cut_face if kind is CutKind.TOTAL else is_cut_face
    if not member(graph, k, removed):
        return void(graph.labels)
    smaller = build_cut_complex(delete_vertices(graph, removed), k, kind)
    return embed(smaller, graph.labels)


def boundary_of_simplex(labels):
    """Total 1-cut complex of an edgeless graph on `labels`: the boundary of the full simplex."""
    labels = tuple(labels)
    everything = full_mask(len(labels))
    return SimplicialComplex(labels, tuple(sorted(everything & ~(1 << v) for v in range(len(labels)))))
