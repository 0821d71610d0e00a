from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given

from oddjm.jack import (
    character,
    inner_product,
    jack_function,
    jack_in_monomial,
    jack_plancherel,
    jack_table,
    theta,
    theta_hat,
    zonal_spherical,
)
from oddjm.partition import (
    conjugate,
    content_alphabet,
    dimension_f,
    dominance_leq,
    j_alpha,
    partitions,
    z_value,
)
from oddjm.permutation import all_permutations, coset_type, cycle_type, hyperoctahedral_group, compose
from oddjm.symfunc import SymFunc

from conftest import ALPHAS, alphas_st, partitions_st


def test_monomial_examples():
    assert jack_in_monomial((1,), 2) == {(1,): 1}
    assert jack_in_monomial((2,), 2) == {(2,): 3, (1, 1): 2}
    for a in ALPHAS:
        assert jack_in_monomial((1, 1), a) == {(1, 1): 2}
        assert jack_function((2,), a) == a * SymFunc.p(2) + SymFunc.p(1, 1)


def test_theta_examples():
    assert theta((2,), (2,), 2) == 2
    for a in ALPHAS:
        assert theta((1, 1), (2,), a) == -1
    for n in range(1, 6):
        for lam in partitions(n):
            assert theta(lam, (1,) * n, Fraction(5, 3)) == 1
    with pytest.raises(ValueError):
        theta((2,), (1,), 1)
    assert theta_hat((2,), (1,), 1) == 1
    assert theta_hat((1, 1), (1,), 1) == -1
    assert theta_hat((2,), (2,), 1) == 0


def test_plancherel_examples():
    assert jack_plancherel((3,), 2) == Fraction(1, 15)
    assert jack_plancherel((2, 1), 2) == Fraction(3, 5)
    for a in ALPHAS:
        assert jack_plancherel((2,), a) == 1 / (1 + a)


def test_plancherel_is_a_probability():
    for a in ALPHAS:
        for n in range(0, 7):
            assert sum(jack_plancherel(lam, a) for lam in partitions(n)) == 1


@given(partitions_st(min_n=1, max_n=6), alphas_st)
def test_orthogonality_and_norm(lam, alpha):
    n = sum(lam)
    table = jack_table(n, alpha).theta
    for mu in partitions(n):
        value = inner_product(table[lam], table[mu], alpha)
        assert value == (j_alpha(lam, alpha) if mu == lam else 0)


@given(partitions_st(min_n=1, max_n=6), alphas_st)
def test_triangular_in_monomials(lam, alpha):
    coeffs = jack_in_monomial(lam, alpha)
    assert all(dominance_leq(mu, lam) for mu in coeffs)
    assert coeffs[(1,) * sum(lam)] == factorial(sum(lam))


@given(partitions_st(min_n=1, max_n=6), alphas_st)
def test_duality(lam, alpha):
    # theta^{lam'}_rho(1/alpha) = (-1)^{n - l(rho)} alpha^{l(rho) - n} theta^lam_rho(alpha)
    n = sum(lam)
    for rho in partitions(n):
        left = theta(conjugate(lam), rho, 1 / alpha)
        right = (-1) ** (n - len(rho)) * alpha ** (len(rho) - n) * theta(lam, rho, alpha)
        assert left == right


@given(partitions_st(min_n=1, max_n=6), alphas_st)
def test_specialization_at_one_variable_count(lam, alpha):
    # J_lam on X equal ones is prod over boxes of (X + a'(s) alpha - l'(s))
    X = 4
    expected = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            expected *= X + j * alpha - i
    assert jack_function(lam, alpha)([1] * X) == expected


def test_characters():
    for n in range(1, 7):
        for lam in partitions(n):
            assert character(lam, (1,) * n) == dimension_f(lam)
            assert character(lam, (n,) if n > 1 else (1,)) in range(-n, n + 1)
        for rho in partitions(n):
            assert character((n,), rho) == 1
            total = sum(Fraction(character(lam, rho) * character(lam, rho), 1) for lam in partitions(n))
            assert total == z_value(rho)


def test_character_row_orthogonality():
    for n in range(1, 7):
        for lam in partitions(n):
            for mu in partitions(n):
                s = sum(Fraction(character(lam, r) * character(mu, r), z_value(r)) for r in partitions(n))
                assert s == (1 if lam == mu else 0)


def test_characters_against_class_sizes():
    # sum over the group of chi(g)^2 = n!
    n = 4
    counts = {}
    for p in all_permutations(n):
        lam = cycle_type(p)
        counts[lam] = counts.get(lam, 0) + 1
    for lam in partitions(n):
        assert sum(c * character(lam, rho) ** 2 for rho, c in counts.items()) == factorial(n)


def test_zonal_spherical_trivial_class():
    for n in range(1, 5):
        for lam in partitions(n):
            assert zonal_spherical(lam, (1,) * n) == 1


def test_zonal_spherical_brute_force():
    # omega^lam(s) = |H_n|^-1 sum_{z in H_n} chi^{2 lam}(s z)
    for n in range(1, 4):
        H = hyperoctahedral_group(n)
        seen = {}
        for s in all_permutations(2 * n):
            rho = coset_type(s)
            if rho not in seen:
                seen[rho] = s
        for lam in partitions(n):
            doubled = tuple(2 * p for p in lam)
            for rho, s in seen.items():
                avg = Fraction(
                    sum(character(doubled, cycle_type(compose(s, z))) for z in H), len(H)
                )
                assert zonal_spherical(lam, rho) == avg


def test_single_row_contents():
    # a single row has contents 0, 1, 2 whatever alpha is
    for a in ALPHAS:
        A = content_alphabet((3,), a)
        assert SymFunc.e(1)(A) == 3
        assert SymFunc.e(2)(A) == 2


def test_table_text():
    text = jack_table(2, 1).tsv()
    assert text.splitlines() == ["lambda\\rho\t2\t1,1", "2\t1\t1", "1,1\t-1\t1"]
