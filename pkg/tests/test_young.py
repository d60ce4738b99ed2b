"""Partition combinatorics: frozen oracles plus property-based invariants."""

import pytest
from hypothesis import given, settings, strategies as st

from sheafchase.young import (
    binomial,
    cauchy_wedge,
    check_partition,
    conjugate,
    count_ssyt,
    dual_weight,
    lr_decompose,
    partitions_of,
    schur_dim,
    sym_power_split,
    tensor_weights,
    wedge_product_decompose,
    weight_dim,
)

partitions = st.lists(st.integers(0, 5), max_size=4).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


def test_lr_2_1_squared_frozen():
    # hand-checked multiplication of S_(2,1) with itself at large rank
    got = lr_decompose((2, 1), (2, 1), 6)
    assert got == {
        (4, 2): 1,
        (4, 1, 1): 1,
        (3, 3): 1,
        (3, 2, 1): 2,
        (3, 1, 1, 1): 1,
        (2, 2, 2): 1,
        (2, 2, 1, 1): 1,
    }


def test_lr_pieri_column():
    # tensoring with a single column adds one box per row, strictly
    got = lr_decompose((2, 1), (1,), 3)
    assert got == {(3, 1): 1, (2, 2): 1, (2, 1, 1): 1}


def test_lr_rank_cap_drops_tall_partitions():
    got = lr_decompose((1, 1), (1, 1), 2)
    assert got == {(2, 2): 1}


@given(partitions, partitions)
@settings(max_examples=60, deadline=None)
def test_lr_symmetric(lam, mu):
    assert lr_decompose(lam, mu, 5) == lr_decompose(mu, lam, 5)


@given(partitions, partitions, st.integers(1, 4))
@settings(max_examples=40, deadline=None)
def test_lr_dimension_count(lam, mu, rank):
    total = sum(
        m * schur_dim(nu, rank) for nu, m in lr_decompose(lam, mu, rank).items()
    )
    assert total == schur_dim(lam, rank) * schur_dim(mu, rank)


@given(partitions)
@settings(max_examples=60, deadline=None)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == check_partition(lam)


@given(partitions, st.integers(1, 5))
@settings(max_examples=60, deadline=None)
def test_schur_dim_matches_tableau_count(lam, rank):
    assert schur_dim(lam, rank) == count_ssyt(lam, rank)


def test_schur_dim_examples():
    assert schur_dim((1,), 4) == 4
    assert schur_dim((1, 1), 4) == 6
    assert schur_dim((2,), 4) == 10
    assert schur_dim((2, 1), 3) == 8


@given(st.integers(0, 8), st.integers(1, 5), st.integers(1, 5))
@settings(max_examples=60, deadline=None)
def test_partitions_of_shape_constraints(n, rows, cap):
    for lam in partitions_of(n, rows, cap):
        assert sum(lam) == n
        assert len(lam) <= rows
        assert all(p <= cap for p in lam)
        check_partition(lam)


def test_cauchy_wedge_total_dimension():
    # wedge^q of a tensor product of spaces of dimensions a and b
    a, b = 3, 2
    for q in range(a * b + 1):
        total = sum(
            schur_dim(lam, a) * schur_dim(lamc, b)
            for (lam, lamc), _ in cauchy_wedge(q, a, b).items()
        )
        assert total == binomial(a * b, q)


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4), st.integers(0, 4))
@settings(max_examples=60, deadline=None)
def test_sym_power_split_count(degrees, j):
    split = sym_power_split(degrees, j)
    assert sum(split.values()) == binomial(len(degrees) + j - 1, j)


def test_wedge_product_decompose_dimension():
    rank = 3
    for i_list in ([1], [2], [1, 1], [1, 2], [2, 2, 1]):
        total = sum(
            m * schur_dim(nu, rank)
            for nu, m in wedge_product_decompose(i_list, rank).items()
        )
        expected = 1
        for i in i_list:
            expected *= binomial(rank, i)
        assert total == expected


@given(st.lists(st.integers(-4, 4), min_size=2, max_size=4).map(
    lambda xs: tuple(sorted(xs, reverse=True))
))
@settings(max_examples=60, deadline=None)
def test_weight_dim_dual_invariant(w):
    assert weight_dim(w) == weight_dim(dual_weight(w))


def test_tensor_weights_matches_lr_on_partitions():
    got = tensor_weights((2, 1, 0), (1, 0, 0), 3)
    assert got == {(3, 1, 0): 1, (2, 2, 0): 1, (2, 1, 1): 1}


def test_tensor_weights_negative_shift():
    # O(-1) (x) O(1) = O on a rank-2 factor
    got = tensor_weights((-1, -1), (1, 1), 2)
    assert got == {(0, 0): 1}


def test_bad_partition_rejected():
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        schur_dim((2, 1), 0)
