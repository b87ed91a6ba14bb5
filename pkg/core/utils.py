import logging
from itertools import combinations

from gridtop import settings

from .exceptions import CapacityError, DomainError

# Initialize logging for utils.py
logger = logging.getLogger(__name__)


# === BITSETS ===
def popcount(mask):
    return mask.bit_count()


def bits(mask):
    """Indices of the set bits of `mask`, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def lowest_bit(mask):
    return (mask & -mask).bit_length() - 1


def highest_bit(mask):
    return mask.bit_length() - 1


def mask_of(indices):
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def full_mask(n):
    return (1 << n) - 1


def is_subset(a, b):
    return a & ~b == 0


def lex_key(mask):
    """Sort key comparing faces as ascending index tuples."""
    return tuple(bits(mask))


def maximalize(masks):
    """Inclusion-maximal members of `masks`, duplicates dropped, sorted by value."""
    unique = sorted(set(masks), key=lambda m: (-popcount(m), m))
    kept = []
    for m in unique:
        if not any(is_subset(m, other) for other in kept):
            kept.append(m)
    kept.sort()
    return tuple(kept)


# === LABELS ===
def format_face(mask, labels):
    """Human form of a face, e.g. {a1,b2}; the empty face prints as {}."""
    return "{" + ",".join(labels[i] for i in bits(mask)) + "}"


def face_labels(mask, labels):
    return [labels[i] for i in bits(mask)]


def mask_from_labels(names, labels):
    index = {label: i for i, label in enumerate(labels)}
    mask = 0
    for name in names:
        if name not in index:
            raise DomainError(f"Unknown vertex label: {name!r}")
        mask |= 1 << index[name]
    return mask


# === CAPS ===
def check_word_size(n):
    if n > settings.WORD_BITS:
        raise CapacityError(f"Universe of {n} vertices exceeds the {settings.WORD_BITS}-vertex limit")


def check_enumeration_cap(n, cap=None):
    limit = settings.MAX_UNIVERSE if cap is None else cap
    if n > limit:
        raise CapacityError(f"Universe of {n} vertices exceeds the enumeration cap of {limit}")
    return limit


def check_prime(p):
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise DomainError(f"Coefficient field needs a prime, got {p}")
    return p


def sign(d):
    """(-1)^d as an int, also for negative d."""
    return -1 if d % 2 else 1
