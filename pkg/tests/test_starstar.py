from fractions import Fraction
from itertools import combinations

import pytest

from sparsepaving.census import iter_star_star_families
from sparsepaving.errors import DomainError
from sparsepaving.starstar import (
    greedy_lower_bound,
    greedy_star_star,
    max_star_star_exact,
    near_count,
    satisfies_star_star,
    sparse_count_lower_bound,
    star_star_upper_bound,
)
from sparsepaving.subsets import enumerate_rsubsets

from conftest import S, fam

RANGE_10 = [(n, r) for n in range(3, 11) for r in range(2, n)]
RANGE_8 = [(n, r) for n in range(3, 9) for r in range(2, n)]


def brute_max_family(n, r):
    """Largest family by checking every subset of the r-subsets."""
    verts = enumerate_rsubsets(n, r)
    for k in range(len(verts), 0, -1):
        for combo in combinations(verts, k):
            if all((a & b).bit_count() <= r - 2 for a, b in combinations(combo, 2)):
                return k
    return 0


def test_report_holds():
    assert satisfies_star_star(fam((1, 4, 5), (2, 4, 6), (3, 5, 6)), 3).holds


def test_report_witness():
    rep = satisfies_star_star(fam((1, 2, 3), (1, 2, 4)), 3)
    assert not rep.holds
    assert rep.witness == (S(1, 2, 3), S(1, 2, 4), 2)


def test_report_empty():
    assert satisfies_star_star((), 3)


def test_mixed_sizes():
    with pytest.raises(DomainError):
        satisfies_star_star(fam((1, 2), (1, 2, 3)), 3)


def test_greedy_examples():
    assert greedy_star_star(4, 2) == fam((1, 2), (3, 4))
    assert greedy_star_star(3, 2) == fam((1, 2))
    assert len(greedy_star_star(6, 3)) >= 2


@pytest.mark.parametrize("n, r", RANGE_10)
def test_greedy_meets_lower_bound(n, r):
    g = greedy_star_star(n, r)
    assert satisfies_star_star(g, r)
    assert len(g) >= greedy_lower_bound(n, r)


def test_upper_bound_values():
    assert star_star_upper_bound(4, 2) == 2
    assert star_star_upper_bound(6, 3) == 5
    assert star_star_upper_bound(5, 2) == Fraction(10, 3)


def test_lower_bound_values():
    assert sparse_count_lower_bound(4, 2) == 2
    assert sparse_count_lower_bound(6, 3) == 4
    assert sparse_count_lower_bound(3, 2) == 2


@pytest.mark.parametrize("n, r, expected", [(4, 2, 2), (5, 2, 2), (6, 3, 4)])
def test_exact_small(n, r, expected):
    best = max_star_star_exact(n, r)
    assert satisfies_star_star(best, r)
    assert len(best) == expected


@pytest.mark.parametrize("n, r", [(4, 2), (4, 3), (5, 2), (5, 3), (5, 4)])
def test_exact_against_plain_brute_force(n, r):
    assert len(max_star_star_exact(n, r)) == brute_max_family(n, r)


@pytest.mark.parametrize("n, r", [(n, r) for n in range(3, 7) for r in range(2, n)])
def test_exact_against_full_enumeration(n, r):
    longest = max(len(f) for f in iter_star_star_families(n, r))
    assert len(max_star_star_exact(n, r)) == longest


@pytest.mark.parametrize("n, r", RANGE_8)
def test_exact_below_upper_bound(n, r):
    best = max_star_star_exact(n, r)
    assert satisfies_star_star(best, r)
    assert len(best) <= star_star_upper_bound(n, r)
    assert len(best) >= len(greedy_star_star(n, r))


@pytest.mark.parametrize("n, r", RANGE_8)
def test_exact_symmetric_under_complement(n, r):
    # complementing maps the conflict graph for r onto the one for n - r
    if 2 <= n - r <= n - 1:
        assert len(max_star_star_exact(n, r)) == len(max_star_star_exact(n, n - r))


def test_exact_refuses_large_n():
    with pytest.raises(DomainError, match="n <= 10"):
        max_star_star_exact(11, 3)


@pytest.mark.parametrize("n, r", RANGE_8)
def test_neighbourhood_size(n, r):
    for x in enumerate_rsubsets(n, r)[:5]:
        assert near_count(x, n, r) == r * (n - r)


@pytest.mark.parametrize("n, r", [(2, 1), (5, 5), (5, 1)])
def test_bounds_domain(n, r):
    with pytest.raises(DomainError):
        star_star_upper_bound(n, r)
