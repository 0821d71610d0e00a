import random
from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from oddjm.partition import partitions, z_value
from oddjm.permutation import (
    Matching,
    all_permutations,
    canonical_matching,
    canonical_permutation,
    compose,
    coset_type,
    cycle_type,
    enumerate_matchings,
    format_cycles,
    format_permutation,
    from_cycles,
    hyperoctahedral_generators,
    hyperoctahedral_group,
    identity,
    inverse,
    is_hyperoctahedral,
    matching_action,
    matching_to_permutation,
    parse_permutation,
    permutation_to_matching,
    reduced_coset_type,
    reduced_cycle_type,
    sign,
    transposition,
)


def test_compose_and_inverse():
    t = transposition(1, 2, 3)
    assert compose(t, t) == identity(3)
    c = from_cycles([(1, 2, 3)], 3)
    assert inverse(c) == from_cycles([(1, 3, 2)], 3)
    s = compose(transposition(1, 2, 3), transposition(2, 3, 3))
    # 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    assert s == (2, 3, 1)
    assert format_cycles(s) == "(1 2 3)"
    with pytest.raises(ValueError):
        compose(identity(3), identity(4))


@given(st.permutations(range(1, 7)), st.permutations(range(1, 7)))
def test_group_laws(a, b):
    a, b = tuple(a), tuple(b)
    assert compose(a, inverse(a)) == identity(6)
    assert inverse(compose(a, b)) == compose(inverse(b), inverse(a))
    assert sign(compose(a, b)) == sign(a) * sign(b)


def test_cycle_types():
    assert cycle_type(identity(4)) == (1, 1, 1, 1)
    assert reduced_cycle_type(identity(4)) == ()
    assert cycle_type(transposition(2, 4, 4)) == (2, 1, 1)
    assert reduced_cycle_type(transposition(2, 4, 4)) == (1,)
    three = from_cycles([(1, 3, 5)], 5)
    assert cycle_type(three) == (3, 1, 1)
    assert reduced_cycle_type(three) == (2,)


def test_cycle_type_class_sizes():
    for n in range(1, 7):
        counts = {}
        for p in all_permutations(n):
            lam = cycle_type(p)
            counts[lam] = counts.get(lam, 0) + 1
        assert counts == {lam: factorial(n) // z_value(lam) for lam in partitions(n)}


def test_coset_type_of_worked_example():
    sigma = parse_permutation("5 1 4 10 3 9 7 6 2 8")
    assert coset_type(sigma) == (3, 2)
    assert len(coset_type(sigma)) == 2
    assert format_permutation(sigma) == "5 1 4 10 3 9 7 6 2 8"


def test_coset_type_basics():
    for n in range(1, 5):
        assert coset_type(identity(2 * n)) == (1,) * n
    with pytest.raises(ValueError):
        coset_type(identity(3))
    H2 = hyperoctahedral_group(2)
    assert len(H2) == 8
    assert all(coset_type(z) == (1, 1) for z in H2)


def test_hyperoctahedral_group_is_centralizer():
    for n in range(1, 4):
        m = 2 * n
        fixed = tuple(k + 1 if k % 2 else k - 1 for k in range(1, m + 1))
        central = sorted(p for p in all_permutations(m) if compose(p, fixed) == compose(fixed, p))
        assert hyperoctahedral_group(n) == central
        assert len(central) == 2 ** n * factorial(n)
        assert all(is_hyperoctahedral(p) == (p in set(central)) for p in all_permutations(m))


def test_generators_generate():
    for n in range(1, 4):
        gens = hyperoctahedral_generators(n)
        seen = {identity(2 * n)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = compose(g, p)
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        assert sorted(seen) == hyperoctahedral_group(n)


def test_coset_type_is_double_coset_invariant():
    H2 = hyperoctahedral_group(2)
    for s in all_permutations(4):
        t = coset_type(s)
        assert all(coset_type(compose(compose(a, s), b)) == t for a in H2 for b in H2)
    rng = random.Random(7)
    for n in (3, 4):
        H = hyperoctahedral_group(n)
        for _ in range(200):
            s = tuple(rng.sample(range(1, 2 * n + 1), 2 * n))
            a, b = rng.choice(H), rng.choice(H)
            assert coset_type(compose(compose(a, s), b)) == coset_type(s)


def test_double_coset_sizes():
    # |H_rho| = |H_n|^2 / (z_{2 rho}), and the double cosets fill S_2n
    for n in range(1, 5):
        sizes = {}
        for p in all_permutations(2 * n):
            t = coset_type(p)
            sizes[t] = sizes.get(t, 0) + 1
        h = 2 ** n * factorial(n)
        assert sum(sizes.values()) == factorial(2 * n)
        assert sizes[(1,) * n] == h
        for rho, size in sizes.items():
            assert size == h * h // z_value(tuple(2 * r for r in rho))


def test_enumerate_matchings():
    assert [str(m) for m in enumerate_matchings(1)] == ["{1,2}"]
    assert len(enumerate_matchings(2)) == 3
    assert len(enumerate_matchings(3)) == 15
    assert len(enumerate_matchings(4)) == 105
    assert len(set(enumerate_matchings(4))) == 105
    assert enumerate_matchings(0) == [Matching(())]


def test_matching_canonical_form():
    assert Matching([(4, 1), (3, 2)]) == Matching([(2, 3), (1, 4)])
    assert str(Matching([(4, 1), (3, 2)])) == "{1,4}{2,3}"
    with pytest.raises(ValueError):
        Matching([(1, 2), (2, 3)])


def test_matching_to_permutation():
    assert matching_to_permutation(Matching([(1, 2), (3, 4)])) == identity(4)
    assert matching_to_permutation(Matching([(1, 3), (2, 4)])) == (1, 3, 2, 4)
    assert matching_to_permutation(Matching([(1, 4), (2, 3)])) == (1, 4, 2, 3)
    for m in enumerate_matchings(3):
        assert permutation_to_matching(matching_to_permutation(m)) == m


def test_canonical_elements():
    m = canonical_matching((2, 1), 5)
    assert m == Matching([(1, 6), (2, 3), (4, 5), (7, 10), (8, 9)])
    assert canonical_matching((), 3) == Matching([(1, 2), (3, 4), (5, 6)])
    assert canonical_permutation((2, 1), 5) == from_cycles([(1, 2, 3), (4, 5)], 5)
    with pytest.raises(ValueError):
        canonical_matching((2, 1), 4)
    for n in range(1, 7):
        for lam in partitions(n):
            mu = tuple(p - 1 for p in lam if p > 1)
            assert reduced_coset_type(matching_to_permutation(canonical_matching(mu, n))) == mu
            assert reduced_cycle_type(canonical_permutation(mu, n)) == mu


def test_matching_action():
    trivial = Matching([(1, 2), (3, 4)])
    for m in enumerate_matchings(2):
        assert matching_action(identity(4), m) == m
    assert matching_action(transposition(3, 4, 4), trivial) == trivial
    assert matching_action(transposition(2, 3, 4), trivial) == Matching([(1, 3), (2, 4)])
    with pytest.raises(ValueError):
        matching_action(identity(6), trivial)


def test_left_cosets_are_matching_fibres():
    for n in range(1, 5):
        H = hyperoctahedral_group(n)
        trivial = canonical_matching((), n)
        fibres = {}
        for s in all_permutations(2 * n):
            fibres.setdefault(matching_action(s, trivial), set()).add(s)
        assert len(fibres) == prod(range(1, 2 * n, 2))
        for m, members in fibres.items():
            rep = matching_to_permutation(m)
            assert members == {compose(rep, z) for z in H}


def test_matchings_by_number_of_components():
    # matchings with n - k loops against the trivial one are counted by e_k(0, 2, 4, ..., 2n-2)
    from oddjm.symfunc import SymFunc

    for n in range(1, 6):
        counts = {}
        for m in enumerate_matchings(n):
            k = n - len(coset_type(matching_to_permutation(m)))
            counts[k] = counts.get(k, 0) + 1
        values = [2 * i for i in range(n)]
        assert counts == {k: int(SymFunc.e(k)(values)) for k in range(n)}
