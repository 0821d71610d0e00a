from fractions import Fraction
from itertools import product

import pytest
import numpy as np
from hypothesis import given, strategies as st

from oddjm.conjectures import (
    alpha_independence,
    area_of_catalan_paths,
    catalan_area,
    exact_rank,
    hecke_generation_rank,
    n_independence,
    second_order_coefficient,
)
from oddjm.symfunc import SymFunc, parse


def _dyck_area_total(k):
    # area under a Dyck path = sum of the heights reached after each step
    total = 0
    for steps in product((1, -1), repeat=2 * k):
        height, area = 0, 0
        for s in steps:
            height += s
            if height < 0:
                break
            area += height
        else:
            if height == 0:
                total += area
    return total


def test_catalan_area_counts_dyck_paths():
    for k in range(1, 7):
        assert catalan_area(k) == _dyck_area_total(k)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_second_coefficient_on_one_row(k):
    obs = area_of_catalan_paths(k)
    assert obs.holds, obs.detail


def test_second_order_values():
    expected = {(): 0, (1,): 1, (2,): 6, (1, 1): 2, (2, 1): 8, (1, 1, 1): 3}
    for mu, value in expected.items():
        assert second_order_coefficient(mu) == value


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hecke_generation(n):
    obs = hecke_generation_rank(n)
    assert obs.holds, obs.detail


def test_hecke_generation_needs_enough_degree():
    # with degree one only e_0 and e_1 are available
    assert not hecke_generation_rank(3, max_degree=1).holds


@pytest.mark.parametrize("k", [1, 2, 3])
def test_alpha_independence(k):
    for obs in alpha_independence(k):
        assert obs.holds, (obs.label, obs.detail)


@pytest.mark.parametrize("text", ["h[3]", "m[2,1]", "p[3]", "e[2]*p[1]"])
def test_n_independence(text):
    for obs in n_independence(parse(text)):
        assert obs.holds, (obs.label, obs.detail)


def test_n_independence_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        n_independence(SymFunc.h(2) + 1)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), max_size=5))
def test_exact_rank_matches_numpy(rows):
    expected = int(np.linalg.matrix_rank(np.array(rows, dtype=float))) if rows else 0
    assert exact_rank([[Fraction(x) for x in r] for r in rows]) == expected
