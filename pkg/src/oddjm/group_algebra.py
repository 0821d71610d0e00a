"""Sparse exact group algebra of S_m and brute-force expansions.

Everything here works with explicit sums of permutations, which makes it the
reference against which the character-theoretic formulas are checked.  Sizes
are capped (see :data:`DEFAULT_MAX_N`) because S_2n grows quickly.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import cache
from itertools import permutations as _perms
from typing import Iterable, Mapping

from .partition import Partition, partitions, unreduce
from .permutation import (
    Permutation,
    all_permutations,
    canonical_matching,
    canonical_permutation,
    coset_type,
    cycle_type,
    format_permutation,
    hyperoctahedral_generators,
    hyperoctahedral_group,
    identity,
    matching_to_permutation,
    permutation_to_matching,
    reduce,
    sign,
    transposition,
)
from .symfunc import SymFunc

__all__ = [
    "DEFAULT_MAX_N",
    "BruteForceLimitError",
    "NotInvariantError",
    "GroupAlgebraElement",
    "max_brute_n",
    "jucys_murphy",
    "hyperoctahedral_sum",
    "eval_symfunc_at_jm",
    "eval_symfunc_at_odd_jm",
    "class_expansion",
    "coset_expansion",
    "m_coefficients_fast",
    "m_coefficient_fast",
    "coset_sum",
    "class_sum",
    "central_element",
]

DEFAULT_MAX_N = 4
HARD_MAX_N = 5
ENV_MAX_N = "ODDJM_MAX_BRUTE_N"


class BruteForceLimitError(ValueError):
    pass


class NotInvariantError(ValueError):
    """Raised when an element is not central / not H_n-biinvariant.

    ``witness`` holds two permutations that should carry equal coefficients.
    """

    def __init__(self, message: str, witness: tuple[Permutation, Permutation]):
        super().__init__(f"{message}: {format_permutation(witness[0])} vs {format_permutation(witness[1])}")
        self.witness = witness


def max_brute_n() -> int:
    value = int(os.environ.get(ENV_MAX_N, DEFAULT_MAX_N))
    return min(value, HARD_MAX_N)


class GroupAlgebraElement:
    """Finite rational combination of permutations of a fixed degree."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Permutation, object] | None = None):
        self.degree = degree
        clean = {}
        for perm, c in (terms or {}).items():
            if c:
                if len(perm) != degree:
                    raise ValueError(f"permutation {perm} does not have degree {degree}")
                clean[tuple(perm)] = c
        self.terms = clean

    @classmethod
    def unit(cls, degree: int) -> "GroupAlgebraElement":
        return cls(degree, {identity(degree): 1})

    @classmethod
    def zero(cls, degree: int) -> "GroupAlgebraElement":
        return cls(degree)

    def _check(self, other: "GroupAlgebraElement") -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __getitem__(self, perm: Permutation):
        return self.terms.get(tuple(perm), 0)

    coefficient = __getitem__

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for perm, c in other.terms.items():
            out[perm] = out.get(perm, 0) + c
        return GroupAlgebraElement(self.degree, out)

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.degree, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + (-other)

    def scale(self, c) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.degree, {p: c * v for p, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return self.scale(other)
        self._check(other)
        out: dict[Permutation, object] = {}
        get = out.get
        left = list(self.terms.items())
        for t, ct in other.terms.items():
            t0 = [j - 1 for j in t]
            for s, cs in left:
                key = tuple([s[j] for j in t0])
                out[key] = get(key, 0) + cs * ct
        return GroupAlgebraElement(self.degree, out)

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, k: int) -> "GroupAlgebraElement":
        out = GroupAlgebraElement.unit(self.degree)
        for _ in range(k):
            out = out * self
        return out

    def conjugate_by(self, g: Permutation) -> "GroupAlgebraElement":
        """``g a g^{-1}``."""
        ginv = [0] * len(g)
        for i, v in enumerate(g, start=1):
            ginv[v - 1] = i
        out = {}
        for s, c in self.terms.items():
            out[tuple(g[s[ginv[i] - 1] - 1] for i in range(len(g)))] = c
        return GroupAlgebraElement(self.degree, out)

    def dump(self) -> str:
        """One ``coeff<TAB>one-line-permutation`` line per term, sorted by permutation."""
        return "\n".join(
            f"{Fraction(c)}\t{format_permutation(p)}" for p, c in sorted(self.terms.items())
        )

    def __repr__(self) -> str:
        return f"GroupAlgebraElement(degree={self.degree}, terms={len(self.terms)})"


def _check_limit(n: int, limit: int | None) -> None:
    cap = max_brute_n() if limit is None else limit
    if n > cap:
        raise BruteForceLimitError(
            f"n={n} exceeds the brute-force limit {cap} (set {ENV_MAX_N} or pass limit=)"
        )


def jucys_murphy(k: int, m: int) -> GroupAlgebraElement:
    """``J_k = (1 k) + (2 k) + ... + (k-1 k)`` in the group algebra of S_m."""
    if not 1 <= k <= m:
        raise ValueError(f"need 1 <= k <= m, got k={k}, m={m}")
    return GroupAlgebraElement(m, {transposition(i, k, m): 1 for i in range(1, k)})


@cache
def _hyperoctahedral_sum(n: int, signed: bool) -> GroupAlgebraElement:
    return GroupAlgebraElement(
        2 * n, {z: (sign(z) if signed else 1) for z in hyperoctahedral_group(n)}
    )


def hyperoctahedral_sum(n: int, signed: bool = False) -> GroupAlgebraElement:
    """``P_n``, or its sign-twisted version ``sum sgn(z) z`` when ``signed``."""
    if n < 1:
        raise ValueError("n must be positive")
    return _hyperoctahedral_sum(n, signed)


@cache
def _jm_power(k: int, e: int, m: int) -> GroupAlgebraElement:
    if e == 0:
        return GroupAlgebraElement.unit(m)
    return _jm_power(k, e - 1, m) * jucys_murphy(k, m)


def _monomial_in(indices: tuple[int, ...], exponents: tuple[int, ...], m: int) -> GroupAlgebraElement:
    out = GroupAlgebraElement.unit(m)
    for k, e in zip(indices, exponents):
        if e:
            out = out * _jm_power(k, e, m)
    return out


@cache
def _monomial_symmetric_at(lam: Partition, indices: tuple[int, ...], m: int) -> GroupAlgebraElement:
    """``m_lam`` evaluated at the commuting family ``J_k, k in indices``."""
    if len(lam) > len(indices):
        return GroupAlgebraElement.zero(m)
    padded = tuple(lam) + (0,) * (len(indices) - len(lam))
    out: dict[Permutation, int] = {}
    for exps in sorted(set(_perms(padded))):
        if any(e and k == 1 for k, e in zip(indices, exps)):
            continue  # J_1 = 0
        for p, c in _monomial_in(indices, exps, m).terms.items():
            out[p] = out.get(p, 0) + c
    return GroupAlgebraElement(m, out)


def eval_symfunc_at_jm(F: SymFunc, indices: Iterable[int], m: int) -> GroupAlgebraElement:
    """``F(J_k : k in indices)`` in the group algebra of S_m via the monomial expansion of F."""
    indices = tuple(indices)
    out: dict[Permutation, object] = {}
    for lam, c in F.to_monomial().items():
        elem = _monomial_symmetric_at(lam, indices, m)
        for p, v in elem.terms.items():
            out[p] = out.get(p, 0) + c * v
    return GroupAlgebraElement(m, {p: _normalize(v) for p, v in out.items()})


def eval_symfunc_at_odd_jm(F: SymFunc, n: int, limit: int | None = None) -> GroupAlgebraElement:
    """``F(J_1, J_3, ..., J_{2n-1})`` in the group algebra of S_2n (without the P_n factor)."""
    _check_limit(n, limit)
    return eval_symfunc_at_jm(F, range(1, 2 * n, 2), 2 * n)


def _normalize(v):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else v


def central_element(coeffs: Mapping[Iterable[int], object], n: int) -> GroupAlgebraElement:
    """``sum coeff(mu) c_mu(n)`` from a map keyed by reduced cycle types."""
    out = GroupAlgebraElement.zero(n)
    for mu, c in coeffs.items():
        out = out + class_sum(Partition(mu), n).scale(c)
    return out


@cache
def class_sum(mu: Partition, n: int) -> GroupAlgebraElement:
    """``c_mu(n)``: sum of permutations of S_n of reduced cycle type mu."""
    lam = unreduce(mu, n)
    return GroupAlgebraElement(n, {p: 1 for p in all_permutations(n) if cycle_type(p) == lam})


@cache
def _coset_classes(n: int) -> dict[Partition, tuple[Permutation, ...]]:
    classes: dict[Partition, list] = {}
    for p in all_permutations(2 * n):
        classes.setdefault(reduce(coset_type(p)), []).append(p)
    return {mu: tuple(v) for mu, v in classes.items()}


def coset_sum(mu: Iterable[int], n: int, signed: bool = False) -> GroupAlgebraElement:
    """``psi_mu(n)``: sum over the double coset of reduced coset type mu (optionally sign-weighted)."""
    mu = Partition(mu)
    members = _coset_classes(n).get(mu, ())
    return GroupAlgebraElement(2 * n, {p: (sign(p) if signed else 1) for p in members})


def _adjacent_transpositions(m: int) -> list[Permutation]:
    return [transposition(i, i + 1, m) for i in range(1, m)]


def _compose(s, t):
    return tuple(s[j - 1] for j in t)


def class_expansion(a: GroupAlgebraElement, exhaustive: bool = False) -> dict[Partition, object]:
    """Coefficients of a central element in the class sums ``c_mu(n)``, keyed by reduced cycle type."""
    n = a.degree
    gens = list(all_permutations(n)) if exhaustive else _adjacent_transpositions(n)
    for s, c in a.terms.items():
        for g in gens:
            conj = _compose(_compose(g, s), _inverse(g))
            if a[conj] != c:
                raise NotInvariantError("element is not central", (s, conj))
    out = {}
    for mu in sorted(_reduced_types(n)):
        c = a[canonical_permutation(mu, n)]
        if c:
            out[mu] = c
    return out


def _inverse(s):
    out = [0] * len(s)
    for i, v in enumerate(s, start=1):
        out[v - 1] = i
    return tuple(out)


def _reduced_types(n: int) -> list[Partition]:
    return [reduce(lam) for lam in partitions(n)]


def coset_expansion(a: GroupAlgebraElement, exhaustive: bool = False, signed: bool = False) -> dict[Partition, object]:
    """Coefficients in the double-coset sums ``psi_mu(n)``, keyed by reduced coset type.

    With ``signed`` the element is expected in the twisted Hecke algebra and
    the coefficients refer to ``psi^eps_mu(n) = sum sgn(s) s``.
    """
    m = a.degree
    if m % 2:
        raise ValueError("coset expansion needs even degree")
    n = m // 2
    gens = hyperoctahedral_group(n) if exhaustive else hyperoctahedral_generators(n)
    for s, c in a.terms.items():
        for g in gens:
            eps = sign(g) if signed else 1
            for other in (_compose(g, s), _compose(s, g)):
                if a[other] != eps * c:
                    raise NotInvariantError("element is not H_n-biinvariant", (s, other))
    out = {}
    for mu in sorted(_reduced_types(n)):
        rep = matching_to_permutation(canonical_matching(mu, n))
        c = a[rep] * (sign(rep) if signed else 1)
        if c:
            out[mu] = c
    return out


def m_coefficients_fast(w: GroupAlgebraElement) -> dict[Partition, object]:
    """Coset coefficients of ``w P_n`` read off from w alone.

    The coefficient of ``psi_mu(n)`` in ``w P_n`` is the total weight of w on
    the left coset ``m_mu H_n``, i.e. on the permutations s that move the
    trivial matching onto the reference matching of type mu.  Only valid when
    ``w P_n`` is biinvariant (e.g. w a symmetric function of odd JM elements).
    """
    m = w.degree
    n = m // 2
    targets = {canonical_matching(mu, n): mu for mu in _reduced_types(n)}
    out: dict[Partition, object] = {}
    for s, c in w.terms.items():
        mu = targets.get(permutation_to_matching(s))
        if mu is not None:
            out[mu] = out.get(mu, 0) + c
    return {mu: v for mu, v in sorted(out.items()) if v}


def m_coefficient_fast(lam: Iterable[int], mu: Iterable[int], n: int, limit: int | None = None):
    """``M^lam_mu(n)``: coefficient of ``psi_mu(n)`` in ``m_lam(J_1, J_3, ..., J_{2n-1}) P_n``."""
    mu = Partition(mu)
    if n < mu.size + mu.length:
        raise ValueError(f"n={n} too small for mu={mu}")
    w = eval_symfunc_at_odd_jm(SymFunc.m(*lam), n, limit=limit)
    return m_coefficients_fast(w).get(mu, 0)
