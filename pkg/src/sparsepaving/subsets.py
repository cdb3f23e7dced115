"""Subsets of a finite ground set as machine-word bitmasks.

Element ``i`` (1-based, as used at every external interface) is stored in
bit ``i - 1``. A family of subsets is a tuple of masks kept in canonical
order: lexicographic on the sorted element lists, which is exactly the order
:func:`itertools.combinations` produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DomainError

MAX_N = 64

Family = tuple  # tuple[int, ...] of bitmasks in canonical order


@dataclass(frozen=True)
class GroundSet:
    """The set {1, ..., n}."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not 1 <= self.n <= MAX_N:
            raise DomainError(f"ground set size must be in 1..{MAX_N}, got {self.n!r}")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1


def ground(n) -> GroundSet:
    return n if isinstance(n, GroundSet) else GroundSet(n)


def mask_of(elems: Iterable[int], n: int | None = None) -> int:
    """Bitmask of a collection of 1-based labels."""
    mask = 0
    for e in elems:
        if not isinstance(e, int) or e < 1 or (n is not None and e > n):
            raise DomainError(f"element {e!r} outside 1..{n if n is not None else MAX_N}")
        mask |= 1 << (e - 1)
    return mask


def elements(mask: int) -> tuple[int, ...]:
    """Sorted 1-based labels of a bitmask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def size(mask: int) -> int:
    return mask.bit_count()


def intersection_size(a: int, b: int) -> int:
    return (a & b).bit_count()


def canonical_key(mask: int) -> tuple[int, ...]:
    return elements(mask)


def enumerate_rsubsets(n, r: int) -> Family:
    """All r-subsets of {1..n} in canonical order."""
    n = ground(n).n
    if not 0 <= r <= n:
        raise DomainError(f"need 0 <= r <= n, got r={r}, n={n}")
    return tuple(sum(1 << i for i in c) for c in combinations(range(n), r))


def subsets_of(mask: int, k: int) -> Family:
    """All k-subsets of ``mask`` in canonical order."""
    return tuple(mask_of(c) for c in combinations(elements(mask), k))


def make_family(members: Iterable[int], r: int | None = None) -> Family:
    """Canonical, duplicate-free family; all members must share one cardinality."""
    uniq = set(members)
    sizes = {m.bit_count() for m in uniq}
    if r is not None:
        bad = sizes - {r}
        if bad:
            raise DomainError(f"family members must have cardinality {r}, found {sorted(bad)}")
    elif len(sizes) > 1:
        raise DomainError(f"family members have mixed cardinalities {sorted(sizes)}")
    return tuple(sorted(uniq, key=canonical_key))


def subset_to_json(mask: int) -> list[int]:
    return list(elements(mask))


def family_to_json(family: Sequence[int]) -> list[list[int]]:
    return [list(elements(m)) for m in family]


def family_from_json(data, n: int | None = None, r: int | None = None) -> Family:
    if not isinstance(data, list):
        raise DomainError("a family must be a JSON array of arrays")
    masks = []
    for item in data:
        if not isinstance(item, list):
            raise DomainError(f"subset must be a JSON array, got {item!r}")
        if len(set(item)) != len(item):
            raise DomainError(f"subset {item} has repeated elements")
        masks.append(mask_of(item, n))
    if len(set(masks)) != len(masks):
        raise DomainError("family has duplicate members")
    return make_family(masks, r)
