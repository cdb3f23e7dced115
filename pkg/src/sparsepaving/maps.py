"""Injections between families of matroids.

``iota`` adds a free element, ``zeta`` splits off an element, and ``psi``,
``psi_bar`` and ``gamma_map`` encode an arbitrary matroid as a tuple of
sparse-paving matroids, one per class of :func:`build_partition`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import DomainError
from .matroid import (
    Matroid,
    decompose_rank_r,
    is_sparse_paving,
    r_circuits,
    rank_one_matroid,
    sparse_from_circuits,
)
from .partition import build_partition
from .subsets import enumerate_rsubsets, family_to_json

Tag = Union[int, tuple[str, int]]


@dataclass(frozen=True)
class TaggedImage:
    entries: tuple[tuple[Matroid, Tag], ...]
    certified: tuple[bool, ...] = ()

    @property
    def matroids(self) -> tuple[Matroid, ...]:
        return tuple(m for m, _ in self.entries)

    @property
    def tags(self) -> tuple[Tag, ...]:
        return tuple(t for _, t in self.entries)

    def to_json(self) -> list[dict]:
        out = []
        for k, (m, tag) in enumerate(self.entries):
            item = {
                "tag": list(tag) if isinstance(tag, tuple) else tag,
                "circuits": family_to_json(r_circuits(m)),
            }
            if self.certified:
                item["certified"] = self.certified[k]
            out.append(item)
        return out


def _require_sparse(m: Matroid):
    if not is_sparse_paving(m):
        raise DomainError("input matroid is not sparse-paving")


def iota(m: Matroid) -> Matroid:
    """Extend to n + 1 elements: every r-set through the new element is a basis."""
    _require_sparse(m)
    if m.n + 1 > 64:
        raise DomainError("ground set would exceed 64 elements")
    new = 1 << m.n
    basis_set = set(m.bases)
    bases = tuple(
        x for x in enumerate_rsubsets(m.n + 1, m.r) if x & new or x in basis_set
    )
    return Matroid(m.n + 1, m.r, bases)


def zeta(m: Matroid) -> tuple[Matroid, Matroid]:
    """Split the r-circuits of ``m`` (on n + 1 elements) by the last element.

    Circuits avoiding element n + 1 become the r-circuits of a rank-r matroid
    on n elements; the others, with n + 1 removed, become the (r-1)-circuits
    of a rank-(r-1) matroid on n elements. For r = 2 the second piece has
    rank 1 and its "circuits" are loops.
    """
    _require_sparse(m)
    n, r = m.n - 1, m.r
    if n < 3 or not 2 <= r <= n - 1:
        raise DomainError(f"zeta needs n >= 3 and 2 <= r <= n-1 on the smaller set, got n={n}, r={r}")
    last = 1 << n
    circuits = r_circuits(m)
    first = [c for c in circuits if not c & last]
    second = [c ^ last for c in circuits if c & last]
    m1 = sparse_from_circuits(n, r, first)
    if r - 1 >= 2:
        m2 = sparse_from_circuits(n, r - 1, second)
    else:
        loops = 0
        for c in second:
            loops |= c
        m2 = rank_one_matroid(n, ((1 << n) - 1) & ~loops)
    return m1, m2


def unzeta(m1: Matroid, m2: Matroid) -> Matroid:
    """Inverse of :func:`zeta` on its image."""
    n, r = m1.n, m1.r
    last = 1 << n
    circuits = list(r_circuits(m1)) + [c | last for c in r_circuits(m2)]
    return sparse_from_circuits(n + 1, r, circuits)


def _check_map_domain(m: Matroid):
    if m.n < 3 or not 2 <= m.r <= m.n - 1:
        raise DomainError(f"need n >= 3 and 2 <= r <= n-1, got n={m.n}, r={m.r}")


def psi(m: Matroid, pivot: int | None = None) -> TaggedImage:
    """Entry j: sparse-paving matroid with r-circuits (C_r | D_r) & U_j."""
    _check_map_domain(m)
    part = build_partition(m.n, m.r, pivot)
    nonbases = set(x for x in enumerate_rsubsets(m.n, m.r) if not m.is_basis(x))
    entries = tuple(
        (sparse_from_circuits(m.n, m.r, [x for x in cls if x in nonbases]), j)
        for j, cls in enumerate(part.classes, start=1)
    )
    return TaggedImage(entries)


def psi_bar(m: Matroid, pivot: int | None = None) -> TaggedImage:
    """Entries (c, j) carry C_r & U_j and entries (d, j) carry D_r & U_j."""
    _check_map_domain(m)
    part = build_partition(m.n, m.r, pivot)
    dec = decompose_rank_r(m)
    circ, dep = set(dec.circuits), set(dec.dependent)
    c_entries = []
    d_entries = []
    for j, cls in enumerate(part.classes, start=1):
        c_entries.append((sparse_from_circuits(m.n, m.r, [x for x in cls if x in circ]), ("c", j)))
        d_entries.append((sparse_from_circuits(m.n, m.r, [x for x in cls if x in dep]), ("d", j)))
    return TaggedImage(tuple(c_entries + d_entries))


def gamma_map(m: Matroid, pivot: int | None = None) -> TaggedImage:
    """Same entries as :func:`psi`, each certified to have circuits inside U_j."""
    image = psi(m, pivot)
    part = build_partition(m.n, m.r, pivot)
    certified = tuple(
        set(r_circuits(entry)) <= set(cls)
        for (entry, _), cls in zip(image.entries, part.classes)
    )
    return TaggedImage(image.entries, certified)


MAPS = {"psi": psi, "psibar": psi_bar, "gamma": gamma_map}
