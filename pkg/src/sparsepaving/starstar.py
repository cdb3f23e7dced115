"""Families of r-subsets pairwise meeting in at most r - 2 elements.

Such families are exactly the independent sets of the *conflict graph*, whose
vertices are the r-subsets and whose edges join two r-subsets sharing r - 1
elements (the Johnson graph J(n, r)).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Optional

from .errors import DomainError, StarStarError
from .subsets import Family, enumerate_rsubsets, ground, make_family

EXACT_MAX_N = 10


@dataclass(frozen=True)
class StarStarReport:
    holds: bool
    witness: Optional[tuple[int, int, int]] = None  # (X, Y, |X & Y|)

    def raise_if_failed(self):
        if not self.holds:
            x, y, k = self.witness
            raise StarStarError(x, y, k, _r_from_witness(x))

    def __bool__(self):
        return self.holds


def _r_from_witness(x: int) -> int:
    return x.bit_count()


def check_star_star(family, r: int) -> StarStarReport:
    """Pair scan without the cardinality check; for internal callers."""
    members = list(family)
    limit = r - 2
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            k = (x & y).bit_count()
            if k > limit:
                return StarStarReport(False, (x, y, k))
    return StarStarReport(True)


def satisfies_star_star(family, r: int) -> StarStarReport:
    """Check that distinct members pairwise meet in at most r - 2 elements."""
    sizes = {x.bit_count() for x in family}
    if sizes - {r}:
        raise DomainError(f"family members must all have cardinality {r}, found {sorted(sizes)}")
    return check_star_star(family, r)


@lru_cache(maxsize=64)
def conflict_graph(n: int, r: int) -> tuple[Family, tuple[int, ...]]:
    """Vertices (r-subsets, canonical order) and adjacency masks over vertex indices."""
    verts = enumerate_rsubsets(n, r)
    target = r - 1
    adj = []
    for x in verts:
        row = 0
        for j, y in enumerate(verts):
            if (x & y).bit_count() == target and x != y:
                row |= 1 << j
        adj.append(row)
    return verts, tuple(adj)


def near_count(x: int, n: int, r: int) -> int:
    """Number of r-subsets meeting ``x`` in exactly r - 1 elements."""
    return sum(1 for y in enumerate_rsubsets(n, r) if (x & y).bit_count() == r - 1)


def _check_range(n: int, r: int):
    if n < 3 or not 2 <= r <= n - 1:
        raise DomainError(f"need n >= 3 and 2 <= r <= n-1, got n={n}, r={r}")


def greedy_star_star(n, r: int) -> Family:
    """Repeatedly keep the smallest r-subset not conflicting with those kept."""
    n = ground(n).n
    _check_range(n, r)
    verts, adj = conflict_graph(n, r)
    alive = (1 << len(verts)) - 1
    chosen = []
    while alive:
        v = (alive & -alive).bit_length() - 1
        chosen.append(verts[v])
        alive &= ~(adj[v] | (1 << v))
    return tuple(chosen)


def greedy_lower_bound(n: int, r: int) -> int:
    """ceil(C(n, r) / (r(n - r) + 1)), the size the greedy family always reaches."""
    _check_range(n, r)
    return -(-comb(n, r) // (r * (n - r) + 1))


def star_star_upper_bound(n: int, r: int) -> Fraction:
    """C(n, r + 1) / (n - r): no (r+1)-set contains two members of the family."""
    _check_range(n, r)
    return Fraction(comb(n, r + 1), n - r)


def sparse_count_lower_bound(n: int, r: int) -> int:
    """2 ** floor(C(n, r) / (r(n - r) + 1))."""
    _check_range(n, r)
    return 2 ** (comb(n, r) // (r * (n - r) + 1))


def random_star_star(n, r: int, rng: random.Random) -> Family:
    """A random family: random maximal family, then a random sub-family of it."""
    n = ground(n).n
    _check_range(n, r)
    verts, adj = conflict_graph(n, r)
    order = list(range(len(verts)))
    rng.shuffle(order)
    blocked = 0
    picked = []
    for v in order:
        if not blocked >> v & 1:
            picked.append(verts[v])
            blocked |= adj[v] | (1 << v)
    return make_family([x for x in picked if rng.random() < 0.5], r)


def max_star_star_exact(n, r: int) -> Family:
    """A maximum-size family, certified by exhausting a branch-and-bound search.

    Searches for a maximum clique in the complement of the conflict graph
    (colour-bounded, in the style of Tomita's MCQ). The greedy family is the
    starting incumbent. The conflict graph is vertex-transitive, so the
    search assumes the first r-subset {1..r} is chosen.
    """
    n = ground(n).n
    if n > EXACT_MAX_N:
        raise DomainError(f"exact search is limited to n <= {EXACT_MAX_N}, got n={n}")
    _check_range(n, r)
    verts, adj = conflict_graph(n, r)
    index = {x: i for i, x in enumerate(verts)}
    incumbent = [index[x] for x in greedy_star_star(n, r)]
    best = [len(incumbent), incumbent]
    full = (1 << len(verts)) - 1
    # compatible = non-adjacent in the conflict graph, excluding the vertex itself
    compat = [full & ~a & ~(1 << i) for i, a in enumerate(adj)]

    def colour(cand):
        # colour classes are cliques of the conflict graph: at most one pick each
        order = []
        uncoloured = cand
        k = 0
        while uncoloured:
            k += 1
            q = uncoloured
            while q:
                bit = q & -q
                v = bit.bit_length() - 1
                order.append((v, k))
                uncoloured ^= bit
                q &= adj[v]
                q &= ~bit
        return order

    def expand(chosen, cand):
        order = colour(cand)
        for v, k in reversed(order):
            if len(chosen) + k <= best[0]:
                return
            chosen.append(v)
            nxt = cand & compat[v]
            if nxt:
                expand(chosen, nxt)
            elif len(chosen) > best[0]:
                best[0] = len(chosen)
                best[1] = list(chosen)
            chosen.pop()
            cand &= ~(1 << v)

    expand([0], compat[0])
    return make_family((verts[i] for i in best[1]), r)
