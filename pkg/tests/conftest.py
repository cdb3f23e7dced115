import pytest

from sparsepaving.census import enumerate_matroids, enumerate_sparse
from sparsepaving.subsets import mask_of


def S(*elems):
    return mask_of(elems)


def fam(*sets):
    return tuple(mask_of(s) for s in sets)


@pytest.fixture(scope="session")
def matroid_census():
    """Every labeled matroid on n <= 5 elements, keyed by (n, r)."""
    return {(n, r): enumerate_matroids(n, r) for n in range(1, 6) for r in range(n + 1)}


@pytest.fixture(scope="session")
def sparse_census():
    """Every sparse-paving matroid for 3 <= n <= 6 and 2 <= r <= n-1."""
    return {(n, r): enumerate_sparse(n, r) for n in range(3, 7) for r in range(2, n)}
