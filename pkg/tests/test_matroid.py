import random

import pytest
from hypothesis import given, settings, strategies as st

from sparsepaving.errors import AxiomError, DomainError, StarStarError
from sparsepaving.matroid import (
    Matroid,
    circuits_of,
    closure_of,
    decompose_rank_r,
    dual,
    find_exchange_violation,
    is_paving,
    is_sparse_paving,
    is_sparse_paving_by_circuits,
    matroid_from_bases,
    matroid_from_json,
    matroid_to_json,
    rank_of,
    sparse_from_circuits,
    uniform,
)
from sparsepaving.starstar import random_star_star
from sparsepaving.subsets import enumerate_rsubsets

from conftest import S, fam


def loop_example():
    # rank 2 on {1..4}, element 4 a loop
    return matroid_from_bases(4, 2, fam((1, 2), (1, 3), (2, 3)))


def test_uniform_from_all_pairs():
    m = matroid_from_bases(4, 2, enumerate_rsubsets(4, 2))
    assert m == uniform(2, 4)


def test_exchange_failure_witness():
    with pytest.raises(AxiomError) as info:
        matroid_from_bases(4, 2, fam((1, 2), (3, 4)))
    assert info.value.witness == (S(1, 2), S(3, 4), 1)


def test_single_basis_is_valid():
    m = matroid_from_bases(3, 2, fam((1, 2)))
    assert m.bases == (S(1, 2),)


def test_no_bases():
    with pytest.raises(AxiomError, match="no bases"):
        matroid_from_bases(3, 2, ())


def test_wrong_cardinality():
    with pytest.raises(DomainError):
        matroid_from_bases(4, 2, fam((1, 2, 3)))


def test_rank():
    assert rank_of(uniform(2, 4), S(1, 2, 3)) == 2
    assert rank_of(uniform(2, 4), 0) == 0
    m = sparse_from_circuits(6, 3, fam((1, 2, 3)))
    assert rank_of(m, S(1, 2, 3)) == 2
    assert rank_of(m, S(1, 2, 4)) == 3


def test_closure():
    u = uniform(2, 4)
    assert closure_of(u, S(1)) == S(1)
    assert closure_of(u, S(1, 2)) == S(1, 2, 3, 4)
    m = sparse_from_circuits(4, 3, fam((1, 2, 3)))
    assert closure_of(m, S(1, 2)) == S(1, 2, 3)


def test_decompose_uniform():
    dec = decompose_rank_r(uniform(3, 6))
    assert dec.circuits == () and dec.dependent == ()
    assert len(dec.bases) == 20


def test_decompose_single_circuit():
    dec = decompose_rank_r(sparse_from_circuits(6, 3, fam((1, 2, 3))))
    assert dec.circuits == (S(1, 2, 3),)
    assert dec.dependent == ()
    assert len(dec.bases) == 19


def test_decompose_loop():
    dec = decompose_rank_r(loop_example())
    assert dec.circuits == ()
    assert dec.dependent == fam((1, 4), (2, 4), (3, 4))


def test_dual_examples():
    assert dual(uniform(2, 4)) == uniform(2, 4)
    assert dual(uniform(0, 3)) == uniform(3, 3)


def test_paving_examples():
    for n in range(0 + 1, 9):
        for r in range(n + 1):
            assert is_paving(uniform(r, n))
            assert is_sparse_paving(uniform(r, n))
    assert not is_paving(loop_example())


def test_rank_one_matroids_are_paving(matroid_census):
    for n in range(1, 6):
        assert all(is_paving(m) for m in matroid_census[n, 1])


def test_small_ground_sets_all_sparse(matroid_census):
    for n in (1, 2):
        for r in range(n + 1):
            assert all(is_sparse_paving(m) for m in matroid_census[n, r])


def test_sparse_examples():
    assert is_sparse_paving(uniform(3, 6))
    assert is_sparse_paving(sparse_from_circuits(6, 3, fam((1, 2, 3))))
    with pytest.raises(AxiomError):
        matroid_from_bases(4, 2, fam((1, 4), (2, 3), (2, 4), (3, 4)))


def test_sparse_from_circuits_examples():
    assert sparse_from_circuits(6, 3, ()) == uniform(3, 6)
    m = sparse_from_circuits(6, 3, fam((4, 5, 6), (1, 2, 4), (1, 3, 5), (2, 3, 6)))
    assert len(m.bases) == 16
    with pytest.raises(StarStarError) as info:
        sparse_from_circuits(3, 2, fam((1, 2), (1, 3)))
    assert {info.value.first, info.value.second} == {S(1, 2), S(1, 3)}
    assert info.value.size == 1


@pytest.mark.parametrize("n, r", [(2, 1), (4, 1), (4, 4)])
def test_sparse_from_circuits_domain(n, r):
    with pytest.raises(DomainError):
        sparse_from_circuits(n, r, ())


@st.composite
def star_star_families(draw):
    n = draw(st.integers(3, 7))
    r = draw(st.integers(2, n - 1))
    seed = draw(st.integers(0, 2**32 - 1))
    return n, r, random_star_star(n, r, random.Random(seed))


@settings(max_examples=150, deadline=None)
@given(star_star_families())
def test_circuit_families_give_sparse_paving_matroids(case):
    n, r, circuits = case
    m = sparse_from_circuits(n, r, circuits)
    assert find_exchange_violation(m.bases, r) is None
    assert m.r == r
    assert is_sparse_paving(m)
    assert decompose_rank_r(m).circuits == circuits


def test_circuit_families_exhaustive_n5(sparse_census):
    for (n, r), ms in sparse_census.items():
        if n > 5:
            continue
        for m in ms:
            assert find_exchange_violation(m.bases, r) is None
            assert is_sparse_paving(m)


def test_two_sparse_paving_tests_agree(matroid_census):
    for (n, r), ms in matroid_census.items():
        if n < 3 or r < 2:
            continue
        for m in ms:
            assert is_sparse_paving(m) == is_sparse_paving_by_circuits(m)


def test_circuits_have_size_at_most_rank_plus_one(matroid_census):
    for (n, r), ms in matroid_census.items():
        if n > 4:
            continue
        for m in ms:
            assert all(c.bit_count() <= r + 1 for c in circuits_of(m))


def test_r_circuits_agree_with_full_circuit_list(matroid_census):
    for m in matroid_census[4, 2]:
        full = {c for c in circuits_of(m) if c.bit_count() == 2}
        assert set(decompose_rank_r(m).circuits) == full


def test_dual_involution(matroid_census):
    for (n, r), ms in matroid_census.items():
        for m in ms:
            d = dual(m)
            assert d.r == n - r
            assert dual(d) == m


def test_census_members_pass_validation(matroid_census):
    for (n, r), ms in matroid_census.items():
        for m in ms:
            assert matroid_from_bases(n, r, m.bases) == m


def test_json_forms():
    m = sparse_from_circuits(5, 2, fam((1, 2)))
    assert matroid_from_json(matroid_to_json(m)) == m
    assert matroid_from_json({"n": 5, "r": 2, "circuits": [[1, 2]]}) == m
    with pytest.raises(DomainError):
        matroid_from_json({"n": 5, "bases": []})


def test_matroid_equality_is_by_bases():
    a = Matroid(3, 2, fam((1, 2), (1, 3)))
    b = Matroid(3, 2, fam((1, 2), (1, 3)))
    assert a == b and hash(a) == hash(b)
