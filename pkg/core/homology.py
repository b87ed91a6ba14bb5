"""Reduced simplicial homology over prime fields.

Faces of each dimension are indexed by increasing bitset value. The boundary of
a face with vertices v_0 < ... < v_d is the signed sum of its facets, the one
missing v_i carrying (-1)^i. The chain complex is augmented: the empty face sits
in degree -1 and every vertex maps onto it.
"""
import logging
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from gridtop import settings

from .complex import face_lists
from .exceptions import DomainError
from .models import BettiProfile, HomologyCheck, Wedge
from .utils import bits, check_prime, sign

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundaryMatrix:
    dim: int
    prime: int
    rows: tuple
    cols: tuple
    matrix: sparse.csc_matrix

    @property
    def shape(self):
        return self.matrix.shape

    def rank(self):
        return _rank(_columns(self.cols, {f: i for i, f in enumerate(self.rows)}, self.prime), self.prime)


def _signed_facets(face):
    """(facet, sign) pairs of the boundary of `face`."""
    return [(face & ~(1 << v), 1 if i % 2 == 0 else -1) for i, v in enumerate(bits(face))]


def _faces(K, cap):
    if K.is_void:
        raise DomainError("The void complex has no chain complex")
    return face_lists(K, cap)


def boundary_matrix(K, d, p=None, cap=None):
    """Matrix of the boundary map from d-faces to (d-1)-faces, entries in 0..p-1."""
    p = check_prime(settings.DEFAULT_PRIME if p is None else p)
    return _matrix(_faces(K, cap), d, p)


def _matrix(faces, d, p):
    rows = tuple(faces.get(d - 1, []))
    cols = tuple(faces.get(d, []))
    position = {f: i for i, f in enumerate(rows)}
    data, row_idx, col_idx = [], [], []
    for j, face in enumerate(cols):
        for facet, coeff in _signed_facets(face):
            row_idx.append(position[facet])
            col_idx.append(j)
            data.append(coeff % p)
    matrix = sparse.csc_matrix(
        (np.array(data, dtype=np.int64), (row_idx, col_idx)), shape=(len(rows), len(cols))
    )
    return BoundaryMatrix(d, p, rows, cols, matrix)


def boundary_squared_zero(K, p=None, cap=None):
    """∂_{d-1}∂_d vanishes mod p in every degree."""
    p = check_prime(settings.DEFAULT_PRIME if p is None else p)
    faces = _faces(K, cap)
    top = max(faces)
    for d in range(1, top + 1):
        lower = _matrix(faces, d - 1, p).matrix
        upper = _matrix(faces, d, p).matrix
        product = (lower @ upper).tocsc()
        if np.any(product.data % p):
            logger.warning(f"⚠️ Boundary squared is nonzero in degree {d} over F_{p}")
            return False
    return True


# === REDUCTION ===
def _columns(cols, position, p, skip=frozenset()):
    """Boundary columns in the representation used by the reducer: int bitsets for p = 2, dicts otherwise."""
    out = []
    for face in cols:
        if face in skip:
            continue
        if p == 2:
            column = 0
            for facet, _ in _signed_facets(face):
                column |= 1 << position[facet]
        else:
            column = {position[facet]: coeff % p for facet, coeff in _signed_facets(face)}
        out.append(column)
    return out


def _reduce(columns, p):
    """Column reduction by lowest pivot; returns the pivot rows found."""
    pivots = {}
    for column in columns:
        if p == 2:
            while column:
                low = column.bit_length() - 1
                other = pivots.get(low)
                if other is None:
                    pivots[low] = column
                    break
                column ^= other
        else:
            while column:
                low = max(column)
                other = pivots.get(low)
                if other is None:
                    pivots[low] = column
                    break
                factor = column[low] * pow(other[low], p - 2, p) % p
                for row, value in other.items():
                    updated = (column.get(row, 0) - factor * value) % p
                    if updated:
                        column[row] = updated
                    else:
                        column.pop(row, None)
    return pivots


def _rank(columns, p):
    return len(_reduce(columns, p))


def boundary_ranks(K, p=None, cap=None):
    """{d: rank ∂_d} for d = 0..dim K, reducing from the top dimension down with clearing."""
    p = check_prime(settings.DEFAULT_PRIME if p is None else p)
    return _ranks(_faces(K, cap), p)


def _ranks(faces, p):
    top = max(faces)
    ranks = {}
    cleared = frozenset()
    for d in range(top, -1, -1):
        rows = faces.get(d - 1, [])
        position = {f: i for i, f in enumerate(rows)}
        pivots = _reduce(_columns(faces.get(d, []), position, p, cleared), p)
        ranks[d] = len(pivots)
        # a pivot row of ∂_d is a (d-1)-face whose own column in ∂_{d-1} reduces to zero
        cleared = frozenset(rows[i] for i in pivots)
    return ranks


def reduced_betti(K, p=None, cap=None):
    """Reduced Betti numbers b_{-1}, b_0, ... over F_p. The void complex gets the zero profile."""
    p = check_prime(settings.DEFAULT_PRIME if p is None else p)
    if K.is_void:
        return BettiProfile(prime=p, betti={-1: 0})
    faces = _faces(K, cap)
    ranks = _ranks(faces, p)
    betti = {}
    for d in sorted(faces):
        betti[d] = len(faces[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
    logger.debug(f"Betti over F_{p}: {betti}")
    return BettiProfile(prime=p, betti=betti)


def euler_characteristic(K, cap=None):
    """Reduced Euler characteristic: the empty face contributes -1."""
    if K.is_void:
        return 0
    return sum(sign(d) * len(fs) for d, fs in face_lists(K, cap).items())


def wedge_profile(profile):
    """(count, dim) when the profile is that of a wedge of equidimensional spheres.

    All-zero profiles give Wedge(count=0, dim=None); mixed profiles give None.
    """
    nonzero = profile.nonzero()
    if not nonzero:
        return Wedge(count=0, dim=None)
    if len(nonzero) == 1:
        (d, b), = nonzero.items()
        return Wedge(count=b, dim=d)
    return None


def cross_check(K, primes=None, cap=None):
    """Betti numbers over several primes, tested against each other, the Euler characteristic and ∂∂ = 0."""
    primes = tuple(settings.CHECK_PRIMES if primes is None else primes)
    if not primes:
        raise DomainError("cross_check needs at least one prime")
    profiles = [reduced_betti(K, p, cap) for p in primes]
    euler = euler_characteristic(K, cap)
    agree = all(profiles[0].same_numbers(other) for other in profiles[1:])
    consistent = all(profile.alternating_sum() == euler for profile in profiles)
    squared = K.is_void or all(boundary_squared_zero(K, p, cap) for p in primes)
    if not (agree and consistent and squared):
        logger.warning(
            f"⚠️ Homology self-check failed: primes agree={agree}, euler={consistent}, ∂∂=0 {squared}"
        )
    return HomologyCheck(
        profiles=profiles,
        euler=euler,
        primes_agree=agree,
        euler_consistent=consistent,
        boundary_zero=squared,
    )
