"""Matroids represented by their basis family.

A :class:`Matroid` is the triple ``(n, r, bases)`` with ``bases`` a canonical
family of r-subset bitmasks. Two matroids are equal exactly when these
triples are equal. The dataclass constructor trusts its input; use
:func:`matroid_from_bases` (exhaustive exchange check) or
:func:`sparse_from_circuits` to build validated values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import AxiomError, DomainError
from .starstar import check_star_star
from .subsets import (
    Family,
    elements,
    enumerate_rsubsets,
    ground,
    make_family,
    subsets_of,
    family_from_json,
    family_to_json,
)


@dataclass(frozen=True)
class Matroid:
    n: int
    r: int
    bases: Family
    _basis_set: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        ground(self.n)
        if not 0 <= self.r <= self.n:
            raise DomainError(f"rank {self.r} outside 0..{self.n}")
        object.__setattr__(self, "_basis_set", frozenset(self.bases))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def is_basis(self, x: int) -> bool:
        return x in self._basis_set

    def is_independent(self, x: int) -> bool:
        if x.bit_count() > self.r:
            return False
        return any(x & b == x for b in self.bases)


@dataclass(frozen=True)
class RankRDecomposition:
    """The r-subsets split into bases, r-circuits and dependent non-circuits."""

    bases: Family
    circuits: Family
    dependent: Family


def find_exchange_violation(bases, r: int) -> Optional[tuple[int, int, int]]:
    """First ``(b1, b2, x)`` breaking basis exchange, or None.

    Scans every ordered pair of bases and every ``x`` in ``b1 - b2`` in
    canonical order.
    """
    basis_set = set(bases)
    for b1 in bases:
        for b2 in bases:
            only1 = b1 & ~b2
            if not only1:
                continue
            only2 = b2 & ~b1
            while only1:
                xbit = only1 & -only1
                only1 ^= xbit
                rest = b1 ^ xbit
                ys = only2
                while ys:
                    ybit = ys & -ys
                    if rest | ybit in basis_set:
                        break
                    ys ^= ybit
                else:
                    return b1, b2, xbit.bit_length()
    return None


def matroid_from_bases(n, r: int, bases) -> Matroid:
    """Validated matroid with the given basis family."""
    n = ground(n).n
    bases = make_family(bases, r)
    if not bases:
        raise AxiomError("no bases")
    if any(b >> n for b in bases):
        raise DomainError(f"basis with an element outside 1..{n}")
    witness = find_exchange_violation(bases, r)
    if witness is not None:
        b1, b2, x = witness
        raise AxiomError(
            f"exchange fails for B1={list(elements(b1))}, B2={list(elements(b2))}, x={x}",
            witness,
        )
    return Matroid(n, r, bases)


def uniform(r: int, n: int) -> Matroid:
    """U_{r,n}: every r-subset is a basis."""
    return Matroid(n, r, enumerate_rsubsets(n, r))


def rank_of(m: Matroid, x: int) -> int:
    if x == 0:
        return 0
    return max((x & b).bit_count() for b in m.bases)


def closure_of(m: Matroid, x: int) -> int:
    rk = rank_of(m, x)
    out = x
    for i in range(m.n):
        bit = 1 << i
        if not x & bit and rank_of(m, x | bit) == rk:
            out |= bit
    return out


def decompose_rank_r(m: Matroid) -> RankRDecomposition:
    """Classify every r-subset as basis, r-circuit or dependent non-circuit.

    An r-circuit is a dependent r-set all of whose (r-1)-subsets are
    independent.
    """
    bases, circuits, dependent = [], [], []
    for x in enumerate_rsubsets(m.n, m.r):
        if m.is_basis(x):
            bases.append(x)
        elif all(m.is_independent(y) for y in _drop_one(x)):
            circuits.append(x)
        else:
            dependent.append(x)
    return RankRDecomposition(tuple(bases), tuple(circuits), tuple(dependent))


def _drop_one(x: int):
    rest = x
    while rest:
        bit = rest & -rest
        rest ^= bit
        yield x ^ bit


def circuits_of(m: Matroid) -> Family:
    """All circuits (minimal dependent sets), by brute force over the power set.

    Cost is 2^n rank queries; meant for small ground sets.
    """
    found = []
    for x in range(1, 1 << m.n):
        if m.is_independent(x):
            continue
        if all(m.is_independent(y) for y in _drop_one(x)):
            found.append(x)
    return tuple(sorted(found, key=lambda c: (c.bit_count(), elements(c))))


def dual(m: Matroid) -> Matroid:
    """Matroid whose bases are the complements of the bases of ``m``."""
    full = m.full
    return Matroid(m.n, m.n - m.r, make_family((full ^ b for b in m.bases), m.n - m.r))


def is_paving(m: Matroid) -> bool:
    """True iff every (r-1)-subset is independent, i.e. no circuit is smaller than r."""
    if m.r == 0:
        return True
    return all(m.is_independent(z) for z in enumerate_rsubsets(m.n, m.r - 1))


def is_sparse_paving(m: Matroid) -> bool:
    return is_paving(m) and is_paving(dual(m))


def is_sparse_paving_by_circuits(m: Matroid) -> bool:
    """Sparse-paving test through the r-circuits: paving, no dependent
    non-circuit r-sets, and r-circuits pairwise meeting in at most r-2 elements.

    Agrees with :func:`is_sparse_paving` for n >= 3 and r >= 2.
    """
    if not is_paving(m):
        return False
    dec = decompose_rank_r(m)
    return not dec.dependent and check_star_star(dec.circuits, m.r).holds


def sparse_from_circuits(n, r: int, circuits) -> Matroid:
    """Sparse-paving matroid whose r-circuits are ``circuits``.

    ``circuits`` must pairwise meet in at most r-2 elements; the bases are
    then all remaining r-subsets. The exchange axiom is not re-checked here.
    """
    n = ground(n).n
    if n < 3 or not 2 <= r <= n - 1:
        raise DomainError(f"need n >= 3 and 2 <= r <= n-1, got n={n}, r={r}")
    circuits = make_family(circuits, r)
    if any(c >> n for c in circuits):
        raise DomainError(f"circuit with an element outside 1..{n}")
    check_star_star(circuits, r).raise_if_failed()
    excluded = set(circuits)
    return Matroid(n, r, tuple(x for x in enumerate_rsubsets(n, r) if x not in excluded))


def r_circuits(m: Matroid) -> Family:
    """r-circuits of a paving matroid: the non-bases among the r-subsets."""
    return tuple(x for x in enumerate_rsubsets(m.n, m.r) if not m.is_basis(x))


def matroid_to_json(m: Matroid) -> dict:
    return {"n": m.n, "r": m.r, "bases": family_to_json(m.bases)}


def matroid_from_json(data) -> Matroid:
    """Parse ``{"n", "r", "bases"}`` (validated) or ``{"n", "r", "circuits"}``."""
    if not isinstance(data, dict) or "n" not in data or "r" not in data:
        raise DomainError('matroid JSON needs "n" and "r"')
    n, r = data["n"], data["r"]
    if not isinstance(n, int) or not isinstance(r, int):
        raise DomainError('"n" and "r" must be integers')
    ground(n)
    if "bases" in data:
        return matroid_from_bases(n, r, family_from_json(data["bases"], n, r))
    if "circuits" in data:
        return sparse_from_circuits(n, r, family_from_json(data["circuits"], n, r))
    raise DomainError('matroid JSON needs "bases" or "circuits"')


def rank_one_matroid(n: int, non_loops: int) -> Matroid:
    """Rank-1 matroid whose bases are the singletons of ``non_loops``."""
    if not non_loops:
        raise DomainError("a rank-1 matroid needs at least one non-loop")
    return Matroid(n, 1, make_family(subsets_of(non_loops, 1), 1))
