from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oddjm.partition import (
    Partition,
    catalan,
    conjugate,
    content_alphabet,
    dimension_f,
    dominance_leq,
    hook_product,
    j_alpha,
    modified_content_alphabet,
    parse_partition,
    partitions,
    reduce,
    refined_catalan,
    unreduce,
    z_value,
)

from conftest import ALPHAS, alphas_st, partitions_st


def test_partition_validation():
    assert Partition((3, 1, 0, 0)) == (3, 1)
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_partition_text():
    assert str(Partition((3, 2, 1))) == "3,2,1"
    assert str(Partition()) == "(0)"
    assert parse_partition("3,2,1") == (3, 2, 1)
    assert parse_partition("(0)") == ()
    assert parse_partition("1,3") == (3, 1)


def test_partitions_order():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert [len(partitions(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    keys = [Partition(p) for n in range(5) for p in partitions(n)]
    assert sorted(reversed(keys)) == keys


def test_conjugate_examples():
    assert conjugate((2, 2, 1)) == (3, 2)
    assert conjugate(()) == ()
    assert conjugate((4, 1)) == (2, 1, 1, 1)


@given(partitions_st(max_n=10))
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert dimension_f(lam) == dimension_f(conjugate(lam))


def test_z_value():
    assert z_value((1, 1, 1)) == 6
    assert z_value((2, 1, 1, 1)) == 12
    assert z_value((3, 2)) == 6
    for n in range(1, 8):
        assert sum(Fraction(1, z_value(rho)) for rho in partitions(n)) == 1


def test_content_alphabets():
    assert sorted(content_alphabet((2, 2, 1))) == [-2, -1, 0, 0, 1]
    assert sorted(2 * a for a in content_alphabet((2, 2, 1), 2)) == [-2, -1, 0, 1, 2]
    a = Fraction(7, 3)
    assert sorted(content_alphabet((2, 2), a)) == sorted([1, 0, -1 / a, 1 - 1 / a])
    with pytest.raises(ValueError):
        content_alphabet((1,), 0)


@given(partitions_st(max_n=8))
def test_content_sum_identity(lam):
    expected = sum(r * (r - 1) // 2 - i * r for i, r in enumerate(lam))
    assert sum(content_alphabet(lam)) == expected


@given(partitions_st(max_n=8))
def test_modified_contents_are_doubled_alpha_two(lam):
    assert sorted(modified_content_alphabet(lam)) == sorted(2 * a for a in content_alphabet(lam, 2))


def _count_syt(shape):
    # count fillings row by row: number of ways to remove a corner recursively
    shape = tuple(shape)
    if not shape:
        return 1
    total = 0
    for i, row in enumerate(shape):
        if i + 1 == len(shape) or shape[i + 1] < row:
            smaller = list(shape)
            smaller[i] -= 1
            total += _count_syt(tuple(p for p in smaller if p))
    return total


def test_dimension_examples():
    assert dimension_f((2, 1)) == 2
    assert dimension_f((4, 4)) == 14 == catalan(4) == _count_syt((4, 4))
    assert dimension_f(()) == 1


@given(partitions_st(min_n=1, max_n=8))
def test_dimension_matches_corner_recursion(lam):
    assert dimension_f(lam) == _count_syt(lam)


def test_j_alpha_examples():
    assert j_alpha((2,), 3) == 72
    for a in ALPHAS:
        assert j_alpha((1,), a) == a
        assert j_alpha((2,), a) == 2 * a * a * (a + 1)
    assert j_alpha((2, 1), 1) == 9


@given(partitions_st(max_n=8), alphas_st)
def test_j_alpha_duality(lam, alpha):
    assert j_alpha(lam, alpha) == alpha ** (2 * sum(lam)) * j_alpha(conjugate(lam), 1 / alpha)
    assert j_alpha(lam, 1) == hook_product(lam) ** 2


def test_reduce_unreduce():
    assert reduce((3, 2, 1, 1)) == (2, 1)
    assert unreduce((2, 1), 7) == (3, 2, 1, 1)
    assert reduce((1, 1)) == ()
    with pytest.raises(ValueError):
        unreduce((2, 1), 4)
    for n in range(11):
        for lam in partitions(n):
            assert unreduce(reduce(lam), n) == lam


def test_dominance():
    assert dominance_leq((1, 1, 1), (3,))
    assert not dominance_leq((3,), (1, 1, 1))
    assert dominance_leq((2, 2), (3, 1))
    assert not dominance_leq((3, 1), (2, 2))
    assert not dominance_leq((2,), (1,))


def test_refined_catalan():
    # refined Catalan numbers of size k add up to the Catalan number
    for k in range(1, 8):
        assert sum(refined_catalan(lam) for lam in partitions(k)) == catalan(k)
    assert refined_catalan(()) == 1
    assert [catalan(k) for k in range(7)] == [1, 1, 2, 5, 14, 42, 132]
