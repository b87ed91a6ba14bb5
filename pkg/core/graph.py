import logging
import re
import string
from dataclasses import dataclass
from enum import Enum

import graphviz
import networkx as nx

from .exceptions import DomainError
from .utils import bits, check_word_size, full_mask, is_subset, lowest_bit, mask_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on at most 64 vertices.

    Vertex i carries labels[i]; adjacency[i] is the bitset of its neighbours.
    """

    labels: tuple
    adjacency: tuple

    def __post_init__(self):
        check_word_size(len(self.labels))
        if len(self.adjacency) != len(self.labels):
            raise DomainError("Adjacency and label lists differ in length")
        if len(set(self.labels)) != len(self.labels):
            raise DomainError("Vertex labels must be distinct")
        for v, nbrs in enumerate(self.adjacency):
            if nbrs >> v & 1:
                raise DomainError(f"Self-loop at {self.labels[v]}")
            for u in bits(nbrs):
                if u >= len(self.labels) or not self.adjacency[u] >> v & 1:
                    raise DomainError(f"Adjacency is not symmetric at {self.labels[v]}")

    @property
    def n_vertices(self):
        return len(self.labels)

    @property
    def vertex_mask(self):
        return full_mask(self.n_vertices)

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise DomainError(f"Vertex {label!r} is not in the graph") from None

    def neighbors(self, v):
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v):
        return self.neighbors(v).bit_count()

    def edges(self):
        """Edges as (u, v) index pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n_vertices) for v in bits(self.adjacency[u]) if u < v]

    def _check_vertex(self, v):
        if not 0 <= v < self.n_vertices:
            raise DomainError(f"Vertex index {v} outside 0..{self.n_vertices - 1}")

    @classmethod
    def from_edges(cls, labels, edges):
        """Build from labels and an edge list given by label or by index."""
        labels = tuple(str(label) for label in labels)
        check_word_size(len(labels))
        position = {label: i for i, label in enumerate(labels)}
        adjacency = [0] * len(labels)
        for u, v in edges:
            u = u if isinstance(u, int) else position.get(str(u), -1)
            v = v if isinstance(v, int) else position.get(str(v), -1)
            if not (0 <= u < len(labels) and 0 <= v < len(labels)):
                raise DomainError(f"Edge ({u}, {v}) has an endpoint outside the graph")
            if u == v:
                raise DomainError(f"Self-loop at {labels[u]}")
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        return cls(labels, tuple(adjacency))

    @classmethod
    def from_networkx(cls, nx_graph):
        labels = [str(node) for node in nx_graph.nodes]
        edges = [(str(u), str(v)) for u, v in nx_graph.edges]
        return cls.from_edges(labels, edges)

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(self.labels)
        g.add_edges_from((self.labels[u], self.labels[v]) for u, v in self.edges())
        return g

    def to_dot(self, name="G"):
        dot = graphviz.Graph(name=name)
        for label in self.labels:
            dot.node(label)
        for u, v in self.edges():
            dot.edge(self.labels[u], self.labels[v])
        return dot.source


# === GRIDS ===
def _row_name(row, m):
    if m <= len(string.ascii_lowercase):
        return string.ascii_lowercase[row]
    return f"r{row + 1}_"


def grid_label(row, col, m=3):
    """Label of the vertex in 0-based `row` and 1-based `col`, e.g. (1, 3) -> "b3"."""
    return f"{_row_name(row, m)}{col}"


def make_grid(m, n):
    """The m x n grid; vertex (row r, column i) gets index (i-1)*m + r."""
    if m < 1 or n < 1:
        raise DomainError(f"Grid needs m, n >= 1, got {m}x{n}")
    check_word_size(m * n)
    labels = [grid_label(r, i, m) for i in range(1, n + 1) for r in range(m)]
    edges = []
    for i in range(n):
        for r in range(m):
            v = i * m + r
            if r + 1 < m:
                edges.append((v, v + 1))
            if i + 1 < n:
                edges.append((v, v + m))
    return Graph.from_edges(labels, edges)


def induced_subgraph(graph, subset):
    """G[S] with vertices reindexed in increasing order and labels preserved."""
    if not is_subset(subset, graph.vertex_mask):
        raise DomainError("Subset is not contained in the vertex set")
    kept = bits(subset)
    position = {v: i for i, v in enumerate(kept)}
    adjacency = tuple(
        mask_of(position[u] for u in bits(graph.adjacency[v] & subset)) for v in kept
    )
    return Graph(tuple(graph.labels[v] for v in kept), adjacency)


def delete_vertices(graph, removed):
    """G minus the vertex set `removed` (bitset)."""
    return induced_subgraph(graph, graph.vertex_mask & ~removed)


def _without(graph, labels):
    return delete_vertices(graph, mask_of(graph.index(label) for label in labels))


class GridFamily(Enum):
    G2XN = "g2xn"
    G2XN_PRIME = "g2xn'"
    G3XN = "g3xn"
    G3XN_PRIME = "g3xn'"
    G3XN1 = "g3xn1"
    G3XN2 = "g3xn2"
    H1 = "h1"
    H2 = "h2"
    H3 = "h3"
    GRID = "grid"


# Smallest admissible size parameter per family
FAMILY_MIN = {
    GridFamily.G2XN: 1,
    GridFamily.G2XN_PRIME: 1,
    GridFamily.G3XN: 1,
    GridFamily.G3XN_PRIME: 1,
    GridFamily.G3XN1: 1,
    GridFamily.G3XN2: 1,
    GridFamily.H1: 1,
    GridFamily.H2: 2,
    GridFamily.H3: 2,
}


def make_family(family, *size):
    """Build a grid family member.

    Every family except GRID takes one size parameter; GRID takes (m, n).
    """
    family = GridFamily(family)
    if family is GridFamily.GRID:
        if len(size) != 2:
            raise DomainError("grid family needs two sizes (m, n)")
        return make_grid(*size)
    if len(size) != 1:
        raise DomainError(f"{family.value} takes exactly one size parameter")
    n = size[0]
    if n < FAMILY_MIN[family]:
        raise DomainError(f"{family.value} needs size >= {FAMILY_MIN[family]}, got {n}")

    if family is GridFamily.G2XN:
        return make_grid(2, n)
    if family is GridFamily.G2XN_PRIME:
        return _without(make_grid(2, n + 1), [f"b{n + 1}"])
    if family is GridFamily.G3XN:
        return make_grid(3, n)
    if family is GridFamily.G3XN_PRIME:
        return _without(make_grid(3, n + 1), [f"a{n + 1}"])
    if family is GridFamily.G3XN1:
        return _without(make_grid(3, n + 1), [f"a{n}", f"b{n}", f"a{n + 1}", f"b{n + 1}"])
    if family is GridFamily.G3XN2:
        return _without(make_grid(3, n), [f"a{n}", f"b{n}"])
    if family is GridFamily.H1:
        return _without(make_grid(3, n), [f"b{n}", f"c{n}"])
    if family is GridFamily.H2:
        return _without(make_grid(3, n - 1), [f"b{n - 1}", f"c{n - 1}"])
    # H3
    return _without(make_grid(3, n), [f"b{n - 1}", f"c{n - 1}", f"b{n}", f"c{n}"])


_SPEC_RE = re.compile(r"^\s*([a-z0-9']+)\s*:\s*(\d+)(?:\s*x\s*(\d+))?\s*$", re.IGNORECASE)


def parse_family(spec):
    """Parse a specifier such as `g2xn:5`, `g2xn':4`, `h1:3` or `grid:4x5` into (family, sizes)."""
    match = _SPEC_RE.match(spec or "")
    if not match:
        raise DomainError(f"Malformed family specifier: {spec!r}")
    tag, first, second = match.group(1).lower(), match.group(2), match.group(3)
    try:
        family = GridFamily(tag)
    except ValueError:
        raise DomainError(f"Unknown graph family: {tag!r}") from None
    if family is GridFamily.GRID:
        if second is None:
            raise DomainError("grid specifier needs the form grid:MxN")
        return family, (int(first), int(second))
    if second is not None:
        raise DomainError(f"{tag} takes a single size, got {spec!r}")
    return family, (int(first),)


def family_from_spec(spec):
    family, size = parse_family(spec)
    return make_family(family, *size)


# === PREDICATES ===
def is_independent(graph, subset):
    for v in bits(subset):
        if graph.adjacency[v] & subset:
            return False
    return True


def enumerate_independent_sets(graph, k):
    """All independent k-sets as bitsets, in increasing bitset order."""
    if k < 0 or k > graph.n_vertices:
        raise DomainError(f"Independent set size {k} outside 0..{graph.n_vertices}")
    found = []

    def extend(chosen, candidates, need):
        if need == 0:
            found.append(chosen)
            return
        while candidates.bit_count() >= need:
            v = lowest_bit(candidates)
            candidates &= ~(1 << v)
            extend(chosen | (1 << v), candidates & ~graph.adjacency[v], need - 1)

    extend(0, graph.vertex_mask, k)
    found.sort()
    return found


def is_connected_subset(graph, subset):
    """True iff G[S] is connected; a single vertex is connected."""
    if subset == 0:
        raise DomainError("Connectivity of the empty vertex set is undefined")
    if not is_subset(subset, graph.vertex_mask):
        raise DomainError("Subset is not contained in the vertex set")
    reached = frontier = subset & -subset
    while frontier:
        grown = 0
        for v in bits(frontier):
            grown |= graph.adjacency[v]
        frontier = grown & subset & ~reached
        reached |= frontier
    return reached == subset


def is_simplicial_vertex(graph, v):
    """N(v) is a clique; vacuously true for isolated vertices."""
    nbrs = graph.neighbors(v)
    for u in bits(nbrs):
        if nbrs & ~graph.adjacency[u] & ~(1 << u):
            return False
    return True


def is_leaf(graph, v):
    return graph.neighbors(v).bit_count() == 1
