"""Partition of all r-subsets into classes with pairwise intersections <= r - 2.

Fix a pivot r-subset X. For each h, the matrix S_h has one row per
(r-h)-subset Z of the complement of X and one column per h-subset A of X,
with entry A | Z. Cyclic diagonals of S_h pick entries in distinct rows and
distinct columns, so they meet in at most r - 2 elements. Diagonals of
matrices whose h differ by at least two never conflict either, so the j-th
diagonals of all odd-h (resp. even-h) matrices are merged into one class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import DomainError
from .subsets import Family, elements, ground, make_family, subsets_of, family_to_json


@dataclass(frozen=True)
class ShMatrix:
    h: int
    rows: Family  # the Z's, (r-h)-subsets of the complement of the pivot
    cols: Family  # the A's, h-subsets of the pivot

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    @property
    def empty(self) -> bool:
        return not self.rows or not self.cols

    @property
    def class_count(self) -> int:
        """Number of diagonals; a matrix with no rows still reports its column count."""
        return max(len(self.rows), len(self.cols))

    def entry(self, i: int, t: int) -> int:
        """Entry in row i, column t (both 1-based)."""
        return self.cols[t - 1] | self.rows[i - 1]

    def grid(self) -> list[list[int]]:
        return [[a | z for a in self.cols] for z in self.rows]


@dataclass(frozen=True)
class StarPartition:
    n: int
    r: int
    pivot: int
    odd_classes: tuple[Family, ...]
    even_classes: tuple[Family, ...]

    @property
    def alpha(self) -> int:
        return len(self.odd_classes)

    @property
    def beta(self) -> int:
        return len(self.even_classes)

    @property
    def gamma(self) -> int:
        return self.alpha + self.beta

    @property
    def classes(self) -> tuple[Family, ...]:
        """All classes, odd ones first; class j (1-based) carries tag j."""
        return self.odd_classes + self.even_classes

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "pivot": list(elements(self.pivot)),
            "odd": [family_to_json(c) for c in self.odd_classes],
            "even": [family_to_json(c) for c in self.even_classes],
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
        }


def _check(n: int, r: int):
    if n < 3 or not 2 <= r <= n - 1:
        raise DomainError(f"need n >= 3 and 2 <= r <= n-1, got n={n}, r={r}")


def _check_pivot(n: int, r: int, pivot: int):
    if pivot >> n or pivot.bit_count() != r:
        raise DomainError(f"pivot must be an {r}-subset of 1..{n}, got {list(elements(pivot))}")


def default_pivot(r: int) -> int:
    return (1 << r) - 1


def build_matrix(n, r: int, pivot: int, h: int) -> ShMatrix:
    n = ground(n).n
    _check_pivot(n, r, pivot)
    if not 0 <= h <= r:
        raise DomainError(f"h must be in 0..{r}, got {h}")
    outside = ((1 << n) - 1) & ~pivot
    if r - h > n - r:
        rows = ()
    else:
        rows = subsets_of(outside, r - h)
    return ShMatrix(h, rows, subsets_of(pivot, h))


def diagonal_class(m: ShMatrix, j: int) -> Family:
    """The j-th cyclic diagonal (1-based) of ``m``.

    With more rows than columns the diagonal takes column t with row
    ((j + t - 2) mod rows) + 1; with more columns the roles swap. A matrix
    without rows has only empty diagonals.
    """
    nrows, ncols = m.shape
    count = max(nrows, ncols)
    if not 1 <= j <= count:
        raise DomainError(f"diagonal index must be in 1..{count}, got {j}")
    if m.empty:
        return ()
    if nrows >= ncols:
        picks = (m.entry((j + t - 2) % nrows + 1, t) for t in range(1, ncols + 1))
    else:
        picks = (m.entry(i, (j + i - 2) % ncols + 1) for i in range(1, nrows + 1))
    return make_family(picks)


def class_counts(n: int, r: int) -> tuple[int, int]:
    """(alpha, beta): max over odd (even) h of max(C(n-r, r-h), C(r, h))."""
    _check(n, r)
    alpha = max(max(comb(n - r, r - h), comb(r, h)) for h in range(1, r + 1, 2))
    beta = max(max(comb(n - r, r - h), comb(r, h)) for h in range(0, r + 1, 2))
    return alpha, beta


def gamma_count(n: int, r: int) -> int:
    alpha, beta = class_counts(n, r)
    return alpha + beta


@lru_cache(maxsize=256)
def build_partition(n, r: int, pivot: int | None = None) -> StarPartition:
    """Classes U_j(odd), j = 1..alpha, and U_j(even), j = 1..beta.

    Class j of a parity collects the j-th diagonal of every matrix S_h of
    that parity; a matrix with fewer diagonals contributes nothing. Classes
    are kept positionally even when empty, so there are exactly gamma of them.
    """
    n = ground(n).n
    _check(n, r)
    if pivot is None:
        pivot = default_pivot(r)
    _check_pivot(n, r, pivot)
    alpha, beta = class_counts(n, r)
    odd = [[] for _ in range(alpha)]
    even = [[] for _ in range(beta)]
    for h in range(r + 1):
        m = build_matrix(n, r, pivot, h)
        target = odd if h % 2 else even
        for j in range(1, m.class_count + 1):
            target[j - 1].extend(diagonal_class(m, j))
    return StarPartition(
        n,
        r,
        pivot,
        tuple(make_family(c, r) for c in odd),
        tuple(make_family(c, r) for c in even),
    )


def nonempty_class_count(n: int, r: int) -> int:
    """Classes actually holding r-subsets: the maxima taken only over h with S_h nonempty."""
    _check(n, r)
    live = [h for h in range(r + 1) if r - h <= n - r]
    odd = [max(comb(n - r, r - h), comb(r, h)) for h in live if h % 2]
    even = [max(comb(n - r, r - h), comb(r, h)) for h in live if not h % 2]
    return max(odd, default=0) + max(even, default=0)
