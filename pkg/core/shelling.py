"""Shelling orders: checking, composition through shedding vertices, and construction.

A facet order F_1, ..., F_t of a pure complex is a shelling when every F_j with
j >= 2 meets the earlier facets in a pure codimension-one subcomplex of its
boundary. The checker works with the pairwise form: for all i < j there is a
k < j with F_i ∩ F_j ⊆ F_k ∩ F_j and |F_k ∩ F_j| = |F_j| - 1.
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from gridtop import settings

from .complex import (
    delete_vertex,
    from_facets,
    is_pure,
    join,
    link,
    simplex,
    skeleton,
    vertex_support,
)
from .cutgen import cut_complex
from .exceptions import CapacityError, CertificationError, DomainError
from .graph import make_grid
from .utils import format_face, highest_bit, is_subset, lex_key, mask_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SheddingSequence:
    """Vertices shed by a recursive construction, in the order they were used."""

    vertices: tuple = ()

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class ShellingOrder:
    labels: tuple
    facets: tuple
    attachments: tuple
    shedding: SheddingSequence = field(default_factory=SheddingSequence)

    def __iter__(self):
        return iter(self.facets)

    def __len__(self):
        return len(self.facets)

    def complex(self):
        return from_facets(self.labels, self.facets)

    def full_boundary_steps(self):
        """Steps whose attachment is the whole boundary of the new facet."""
        return sum(1 for f, att in zip(self.facets, self.attachments) if len(att) == f.bit_count())

    def describe(self):
        return [format_face(f, self.labels) for f in self.facets]


@dataclass(frozen=True)
class ShellingCheck:
    ok: bool
    failed_at: Optional[int] = None  # 1-based position of the first bad facet

    def __bool__(self):
        return self.ok


def _masks(order):
    return tuple(order.facets) if isinstance(order, ShellingOrder) else tuple(order)


def _restriction(face, earlier):
    """Codimension-one faces of `face` that lie in an earlier facet."""
    target = face.bit_count() - 1
    return sorted({face & g for g in earlier if (face & g).bit_count() == target})


def _attaches(face, earlier):
    if not earlier:
        return True
    ridges = _restriction(face, earlier)
    if not ridges:
        return False
    return all(any(is_subset(face & g, r) for r in ridges) for g in earlier)


def _check_order_matches(K, order):
    if K.is_void:
        raise DomainError("The void complex has no shelling")
    if not is_pure(K):
        raise DomainError("Shellings are only checked for pure complexes")
    if sorted(order) != list(K.facets):
        raise DomainError("Order does not list exactly the facets of the complex")


def check_shelling_order(K, order):
    order = _masks(order)
    _check_order_matches(K, order)
    for j, face in enumerate(order):
        if not _attaches(face, order[:j]):
            return ShellingCheck(False, j + 1)
    return ShellingCheck(True)


def check_shelling_prefixes(K, order):
    """Same predicate as check_shelling_order, built from the intersection complexes directly."""
    order = _masks(order)
    _check_order_matches(K, order)
    for j in range(1, len(order)):
        face = order[j]
        meet = from_facets(K.labels, [face & g for g in order[:j]])
        if {f.bit_count() for f in meet.facets} != {face.bit_count() - 1}:
            return ShellingCheck(False, j + 1)
    return ShellingCheck(True)


def certify(K, order, shedding=()):
    """Wrap a checked order; raises CertificationError if it is not a shelling of K."""
    order = _masks(order)
    verdict = check_shelling_order(K, order)
    if not verdict:
        raise CertificationError(
            f"Facet {verdict.failed_at} ({format_face(order[verdict.failed_at - 1], K.labels)}) breaks the shelling"
        )
    attachments = tuple(tuple(_restriction(f, order[:j])) for j, f in enumerate(order))
    return ShellingOrder(K.labels, order, attachments, SheddingSequence(tuple(shedding)))


# === SHEDDING ===
def is_shedding_vertex(K, v):
    """Every facet of del_K(v) is a facet of K."""
    if K.is_void:
        raise DomainError("The void complex has no shedding vertices")
    if not 0 <= v < K.n_vertices:
        raise DomainError(f"Vertex index {v} outside the universe")
    own = set(K.facets)
    return all(f in own for f in delete_vertex(K, v).facets)


def compose_shelling(K, v, order_del, order_lk, shedding=()):
    """Shelling of K from shellings of del_K(v) and lk_K(v): the deletion first, then the link facets coned by v."""
    if not is_pure(K):
        raise DomainError("compose_shelling needs a pure complex")
    if not vertex_support(K) >> v & 1:
        raise DomainError(f"{K.labels[v]} is not a vertex of the complex")
    if not is_shedding_vertex(K, v):
        raise DomainError(f"{K.labels[v]} is not a shedding vertex")
    deletion, lk = delete_vertex(K, v), link(K, 1 << v)
    if not check_shelling_order(deletion, order_del):
        raise DomainError(f"Deletion order is not a shelling of del({K.labels[v]})")
    if not check_shelling_order(lk, order_lk):
        raise DomainError(f"Link order is not a shelling of lk({K.labels[v]})")
    order = list(_masks(order_del)) + [f | (1 << v) for f in _masks(order_lk)]
    return certify(K, order, shedding)


def skeleton_shelling_order(s, d, labels=None):
    """d-skeleton of the (s-1)-simplex, facets in lexicographic order."""
    if s < 1 or not 0 <= d <= s - 1:
        raise DomainError(f"Skeleton needs 0 <= d <= s-1, got s={s}, d={d}")
    labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(1, s + 1))
    if len(labels) != s:
        raise DomainError("Need one label per simplex vertex")
    K = skeleton(simplex(labels), d)
    return certify(K, [mask_of(c) for c in combinations(range(s), d + 1)])


def join_shelling_order(first, second):
    """Shelling of the join: F ∪ G ordered by (position of F, position of G)."""
    K = join(first.complex(), second.complex())
    shift = len(first.labels)
    return certify(K, [f | (g << shift) for f in first.facets for g in second.facets])


def search_shelling_order(K, budget=None):
    """Exhaustive backtracking; None certifies that no shelling exists."""
    if K.is_void:
        raise DomainError("The void complex has no shelling")
    if not is_pure(K):
        raise DomainError("Shelling search needs a pure complex")
    limit = settings.SEARCH_BUDGET if budget is None else budget
    facets = K.facets
    t = len(facets)
    if t > limit:
        raise CapacityError(f"{t} facets exceed the shelling search budget of {limit}")
    complete = (1 << t) - 1
    dead = set()
    chosen = []

    def extend(used):
        if used == complete:
            return True
        if used in dead:
            return False
        earlier = [facets[i] for i in chosen]
        for i in range(t):
            if used >> i & 1 or not _attaches(facets[i], earlier):
                continue
            chosen.append(i)
            if extend(used | (1 << i)):
                return True
            chosen.pop()
        dead.add(used)
        return False

    if not extend(0):
        logger.info(f"No shelling exists for a complex with {t} facets ({len(dead)} dead states)")
        return None
    return certify(K, [facets[i] for i in chosen])


# === CUT COMPLEXES OF 2 x n GRIDS ===
def _a(i):
    return 2 * (i - 1)


def _b(i):
    return 2 * (i - 1) + 1


def _edge_sweep(K):
    """Connected order of a one-dimensional complex: each edge touches the ones before it."""
    remaining = list(K.facets)
    order = [remaining.pop(0)]
    covered = order[0]
    while remaining:
        nxt = next((f for f in remaining if f & covered), None)
        if nxt is None:
            raise CertificationError("One-dimensional piece is disconnected, it has no shelling")
        remaining.remove(nxt)
        order.append(nxt)
        covered |= nxt
    return order


def _elementary(K):
    """Order for void, single-facet, 0- and 1-dimensional pieces; None when K is none of these."""
    if K.is_void:
        return []
    if len(K.facets) == 1:
        return list(K.facets)
    top = max(f.bit_count() for f in K.facets)
    if top <= 1:
        return list(K.facets)
    if top == 2:
        return _edge_sweep(K)
    return None


def _apex_first(K, apex):
    """Facets containing `apex` in lexicographic order, then the rest in lexicographic order."""
    return sorted(K.facets, key=lambda f: (0 if f >> apex & 1 else 1, lex_key(f)))


def _grouped(K):
    """Facets grouped by their top vertex, highest first.

    Within the group of b_i, facets also containing a_i come first; ties are broken lexicographically.
    """

    def key(f):
        top = highest_bit(f)
        paired = top % 2 == 1 and f >> (top - 1) & 1
        return (-top, 0 if paired else 1, lex_key(f))

    return sorted(K.facets, key=key)


class _CutShellingBuilder:
    """Recursive construction for Δ_k(G_{2×n}) on the universe of G_{2×n}.

    Alternates between the grid complex and the complex of the grid minus its
    last b-vertex, shedding b_n, a_{n+1}, b_n and a_n as in the shedding lemmas.
    """

    def __init__(self, labels, budget):
        self.labels = labels
        self.budget = budget
        self.shed = []

    def _base(self, K, fallback):
        order = _elementary(K)
        if order is not None:
            return order
        return fallback()

    def _search(self, K):
        found = search_shelling_order(K, self.budget)
        if found is None:
            raise CertificationError(f"Base piece with {len(K.facets)} facets is not shellable")
        return list(found.facets)

    def _leaf(self, K, ordering):
        if K.is_void:
            return []
        order = self._base(K, lambda: ordering(K))
        if check_shelling_order(K, order):
            return order
        logger.info(f"Leaf order rejected on {len(K.facets)} facets, searching instead")
        return self._search(K)

    def _shed(self, K, v, del_builder, lk_builder):
        if not vertex_support(K) >> v & 1:
            return del_builder(K)
        if not is_shedding_vertex(K, v):
            logger.info(f"{self.labels[v]} is not shedding here, searching instead")
            return self._search(K)
        self.shed.append(self.labels[v])
        order_del = del_builder(delete_vertex(K, v))
        order_lk = lk_builder(link(K, 1 << v))
        return list(compose_shelling(K, v, order_del, order_lk).facets)

    def grid(self, K, n):
        """K is Δ_k(G_{2×n})."""
        def recurse():
            if n <= 3:
                return self._search(K)
            return self._shed(
                K, _b(n),
                lambda D: self.deleted(D, n),
                lambda L: self.prime(L, n - 1),
            )

        return self._base(K, recurse)

    def prime(self, K, n):
        """K is Δ_k(G'_{2×n}), the grid G_{2×(n+1)} without b_{n+1}."""
        return self._base(K, lambda: self._shed(
            K, _a(n + 1),
            lambda D: self.prime_deleted(D, n),
            lambda L: self.grid(L, n),
        ))

    def prime_deleted(self, K, n):
        """K is del(a_{n+1}) inside Δ_k(G'_{2×n})."""
        leaf = lambda X: self._leaf(X, lambda Y: _apex_first(Y, _a(n)))
        return self._base(K, lambda: self._shed(K, _b(n), leaf, leaf))

    def deleted(self, K, n):
        """K is del(b_n) inside Δ_k(G_{2×n})."""
        leaf = lambda X: self._leaf(X, _grouped)
        return self._base(K, lambda: self._shed(K, _a(n), leaf, leaf))


def shelling_for_cut_2xn(n, k, budget=None):
    """Certified shelling of the k-cut complex of the 2 x n grid, for n >= 3 and 3 <= k <= 2n-3."""
    if n < 3 or not 3 <= k <= 2 * n - 3:
        raise DomainError(f"Construction covers n >= 3 and 3 <= k <= 2n-3, got n={n}, k={k}")
    grid = make_grid(2, n)
    K = cut_complex(grid, k)
    builder = _CutShellingBuilder(grid.labels, settings.SEARCH_BUDGET if budget is None else budget)
    try:
        order = builder.grid(K, n)
    except DomainError as exc:
        raise CertificationError(f"Construction broke down for n={n}, k={k}: {exc}") from exc
    logger.info(f"✅ Shelling of Δ_{k}(G_2x{n}) built: {len(order)} facets, shed {builder.shed}")
    return certify(K, order, builder.shed)


def order_from_labels(K, rows):
    """Facet order given as label lists, checked against K's universe."""
    index = {label: i for i, label in enumerate(K.labels)}
    order = []
    for row in rows:
        missing = [name for name in row if name not in index]
        if missing:
            raise DomainError(f"Unknown vertex labels {missing}")
        order.append(mask_of(index[name] for name in row))
    return order
