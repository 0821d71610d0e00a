from fractions import Fraction
from itertools import product

import pytest

from oddjm.partition import catalan, partitions, reduce
from oddjm.permutation import all_permutations, coset_type
from oddjm.weingarten import (
    HeckeElement,
    SeriesMismatchError,
    integrate_diagonal,
    integrate_monomial,
    wg_exact,
    wg_formal_series,
    wg_series,
    wg_value,
)


def _wg2(N):
    d = Fraction(N * (N - 1) * (N + 2))
    return {(): (N + 1) / d, (1,): -1 / d}


def test_exact_examples():
    for N in range(1, 8):
        assert wg_exact(1, N)[()] == Fraction(1, N)
    for N in range(2, 9):
        w = wg_exact(2, N)
        assert {mu: w[mu] for mu in [(), (1,)]} == _wg2(N)
    with pytest.raises(ValueError):
        wg_exact(3, 2)
    with pytest.raises(KeyError):
        wg_exact(2, 5)[(2,)]


def test_exact_is_inverse_of_gram_matrix():
    # summing over all of S_2n, sum_t Wg(s^-1 t) N^{loops(t)} is |H_n| on H_n and 0 elsewhere
    n, N = 2, 5
    wg = wg_exact(n, N)
    perms = list(all_permutations(2 * n))
    loops = {p: len(coset_type(p)) for p in perms}
    for s in perms[:6]:
        s_inv = tuple(sorted(range(1, 2 * n + 1), key=lambda k: s[k - 1]))
        total = sum(
            wg.at(tuple(s_inv[t[k] - 1] for k in range(2 * n))) * N ** loops[t] for t in perms
        )
        expected = 8 if reduce(coset_type(s)) == () else 0
        assert total == expected, s


def test_series_examples():
    s = wg_series(3, (), 6)
    assert list(s.coefficients) == [1, 0, 6, 6, 50, 126, 610]
    assert s.signed() == [1, 0, 6, -6, 50, -126, 610]
    assert s.leading_power() == -3
    s = wg_series(4, (1,), 3)
    assert s.signed() == [-1, 1, -21, 57]
    assert str(wg_series(2, (1,), 2)) == "-1*N^-3 + 1*N^-4 - 3*N^-5"
    for n in range(3, 6):
        assert wg_series(n, (2,), 0).coefficients[0] == 2


def test_leading_coefficient_is_catalan_product():
    for n in range(1, 6):
        for lam in partitions(n):
            mu = reduce(lam)
            lead = wg_series(n, mu, 0).signed()[0]
            expected = (-1) ** sum(mu)
            for part in mu:
                expected *= catalan(part)
            assert lead == expected


def test_formal_series_against_exact_values():
    # ten terms leave an error of order N^-(n+10)
    n, mu = 3, (1,)
    terms = wg_formal_series(n, mu, 10)
    N = 1000
    approx = sum(c * Fraction(1, N) ** (n + k) for k, c in enumerate(terms))
    exact = wg_value(mu, n, N)
    assert abs(exact - approx) < Fraction(10 ** 6, N ** (n + 10))
    assert abs(exact - approx) > Fraction(1, N ** (n + 11))


def test_series_check_detects_mismatch(monkeypatch):
    from oddjm import weingarten

    monkeypatch.setattr(weingarten, "wg_formal_series", lambda n, mu, t: [Fraction(0)] * t)
    with pytest.raises(SeriesMismatchError):
        wg_series(2, (), 2)
    assert wg_series(2, (), 2, check=False).coefficients[0] == 1


def test_series_arguments():
    with pytest.raises(ValueError):
        wg_series(2, (2,), 1)
    with pytest.raises(ValueError):
        wg_series(2, (), -1)


def test_integrate_examples():
    for N in range(2, 7):
        assert integrate_monomial((1, 1), (1, 1), N) == Fraction(1, N)
        assert integrate_monomial((1, 1, 2, 2), (1, 1, 2, 2), N) == Fraction(N + 1, N * (N - 1) * (N + 2))
        assert integrate_monomial((1, 1, 1, 1), (1, 1, 2, 2), N) == Fraction(1, N * (N + 2))
    assert integrate_monomial((), (), 3) == 1
    assert integrate_monomial((1, 2), (1, 1), 3) == 0


def test_integrate_diagonal():
    assert integrate_diagonal(1, 4) == Fraction(1, 4)
    assert integrate_diagonal(2, 5) == Fraction(3, 70)
    assert integrate_diagonal(3, 10) == wg_exact(3, 10)[()]


def test_fourth_moment_of_an_entry():
    # g_11 has the law of the first coordinate of a uniform unit vector: E[g^4] = 3 / (N (N + 2))
    for N in range(2, 7):
        assert integrate_monomial((1,) * 4, (1,) * 4, N) == Fraction(3, N * (N + 2))


def test_row_sums_of_squares():
    for N in range(2, 9):
        total = sum(integrate_monomial((1, 1), (j, j), N) for j in range(1, N + 1))
        assert total == 1
        total = sum(
            integrate_monomial((1, 1, 1, 1), (a, a, b, b), N) for a, b in product(range(1, N + 1), repeat=2)
        )
        assert total == 1


def test_integrate_errors():
    with pytest.raises(ValueError):
        integrate_monomial((1, 1), (1,), 3)
    with pytest.raises(ValueError):
        integrate_monomial((1,), (1,), 3)
    with pytest.raises(ValueError):
        integrate_monomial((1, 4), (1, 1), 3)


def test_hecke_element_lookup():
    w = wg_exact(3, 6)
    assert w.at((1, 2, 3, 4, 5, 6)) == w[()]
    assert w.at((1, 3, 2, 4, 5, 6)) == w[(1,)]
    assert [mu for mu, _ in w.items()] == sorted(w.coeffs)
    assert w.tsv().splitlines()[0] == f"(0)\t{w[()]}"
    with pytest.raises(ValueError):
        HeckeElement(2, {(2,): Fraction(1)})
