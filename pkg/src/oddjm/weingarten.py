"""Orthogonal Weingarten function: exact values, 1/N expansions, matrix integrals.

``Wg(sigma)`` only depends on the reduced coset type mu of sigma, so values
are stored per mu.  The exact value comes from the spectral formula

    Wg(mu) = 1/(2n-1)!! * sum_{lam |- n} f^{2 lam} omega^lam_{mu+1^(n-|mu|)} / prod_{box} (N + c'(box))

with ``c'(i, j) = 2j - i - 1``.  The large-N expansion has the form
``sum_k (-1)^(|mu|+k) g_k N^(-n-|mu|-k)`` where ``g_k`` is the alpha = 2
average of ``h_{|mu|+k}`` on mu.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import prod
from typing import Iterable, Mapping, Sequence

from .averages import average
from .jack import zonal_spherical
from .partition import (
    Partition,
    dimension_f,
    modified_content_alphabet,
    partitions,
    reduce,
    unreduce,
)
from .permutation import (
    compose,
    coset_type,
    enumerate_matchings,
    inverse,
    matching_to_permutation,
)
from .symfunc import SymFunc

__all__ = [
    "HeckeElement",
    "WgSeries",
    "SeriesMismatchError",
    "wg_exact",
    "wg_value",
    "wg_formal_series",
    "wg_series",
    "integrate_monomial",
    "integrate_diagonal",
]


class SeriesMismatchError(ArithmeticError):
    """The two routes to the 1/N expansion disagree."""


def _reduced_types(n: int) -> list[Partition]:
    return sorted(reduce(lam) for lam in partitions(n))


@dataclass(frozen=True)
class HeckeElement:
    """An H_n-biinvariant function on S_2n, stored by reduced coset type."""

    n: int
    coeffs: Mapping[Partition, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {Partition(mu): Fraction(c) for mu, c in self.coeffs.items()})
        for mu in self.coeffs:
            if mu.size + mu.length > self.n:
                raise ValueError(f"reduced coset type {mu} does not occur for n={self.n}")

    def __getitem__(self, mu: Iterable[int]) -> Fraction:
        mu = Partition(mu)
        if mu.size + mu.length > self.n:
            raise KeyError(f"reduced coset type {mu} does not occur for n={self.n}")
        return self.coeffs.get(mu, Fraction(0))

    def at(self, sigma: Sequence[int]) -> Fraction:
        """Value at a permutation of {1..2n}."""
        if len(sigma) != 2 * self.n:
            raise ValueError(f"expected a permutation of {2 * self.n} points")
        return self[reduce(coset_type(sigma))]

    def items(self):
        return sorted(self.coeffs.items())

    def tsv(self) -> str:
        return "\n".join(f"{mu}\t{value}" for mu, value in self.items())


def _double(lam: Partition) -> Partition:
    return Partition(2 * p for p in lam)


@cache
def _spectral_weights(n: int) -> dict[Partition, dict[Partition, Fraction]]:
    """``f^{2 lam} omega^lam_nu / (2n-1)!!`` for every lam and reduced type of nu."""
    double_factorial = prod(range(1, 2 * n, 2))
    out = {}
    for lam in partitions(n):
        f2 = dimension_f(_double(lam))
        out[lam] = {
            mu: Fraction(f2, double_factorial) * zonal_spherical(lam, unreduce(mu, n))
            for mu in _reduced_types(n)
        }
    return out


@cache
def _wg_exact(n: int, N: int) -> HeckeElement:
    weights = _spectral_weights(n)
    coeffs: dict[Partition, Fraction] = {}
    for lam, row in weights.items():
        denom = prod(N + c for c in modified_content_alphabet(lam))
        for mu, w in row.items():
            coeffs[mu] = coeffs.get(mu, Fraction(0)) + w / denom
    return HeckeElement(n, {mu: v for mu, v in sorted(coeffs.items())})


def wg_exact(n: int, N: int) -> HeckeElement:
    if n < 1:
        raise ValueError("n must be positive")
    if N < n:
        raise ValueError(f"need N >= n, got N={N}, n={n}")
    return _wg_exact(n, N)


def wg_value(mu: Iterable[int], n: int, N: int) -> Fraction:
    return wg_exact(n, N)[mu]


def _check_mu(mu: Partition, n: int) -> None:
    if mu.size + mu.length > n:
        raise ValueError(f"n={n} is too small for reduced coset type {mu}")


def wg_formal_series(n: int, mu: Iterable[int], terms: int) -> list[Fraction]:
    """Coefficients ``a_0, ..., a_{terms-1}`` with ``Wg(mu) = N^-n sum_k a_k N^-k + ...``.

    Each ``1/prod(N + c)`` is expanded as ``N^-n prod sum_k (-c)^k N^-k`` in
    exact truncated series arithmetic.
    """
    mu = Partition(mu)
    _check_mu(mu, n)
    total = [Fraction(0)] * terms
    for lam, row in _spectral_weights(n).items():
        w = row[mu]
        if not w:
            continue
        series = [Fraction(0)] * terms
        series[0] = Fraction(1)
        for c in modified_content_alphabet(lam):
            if c == 0:
                continue
            geometric = [Fraction(-c) ** k for k in range(terms)]
            series = [
                sum((series[i] * geometric[k - i] for i in range(k + 1)), Fraction(0))
                for k in range(terms)
            ]
        for k in range(terms):
            total[k] += w * series[k]
    return total


@dataclass(frozen=True)
class WgSeries:
    """``Wg(mu) = sum_k (-1)^(|mu|+k) g_k N^(-n-|mu|-k)``; ``coefficients`` holds g_0, g_1, ..."""

    n: int
    mu: Partition
    coefficients: tuple[Fraction, ...]

    def signed(self) -> list[Fraction]:
        """Coefficients as they appear in front of ``N^(-n-|mu|-k)``."""
        s = self.mu.size
        return [(-1) ** (s + k) * g for k, g in enumerate(self.coefficients)]

    def leading_power(self) -> int:
        return -self.n - self.mu.size

    def __str__(self) -> str:
        pieces = []
        for k, c in enumerate(self.signed()):
            power = self.leading_power() - k
            term = f"{abs(c)}*N^{power}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + term)
            else:
                pieces.append((" - " if c < 0 else " + ") + term)
        return "".join(pieces)


def wg_series(n: int, mu: Iterable[int], order: int, check: bool = True) -> WgSeries:
    """``g_0, ..., g_order`` computed as averages of complete symmetric functions.

    With ``check`` the formal 1/N expansion of the exact value must agree term
    by term, otherwise :class:`SeriesMismatchError` is raised.
    """
    mu = Partition(mu)
    _check_mu(mu, n)
    if order < 0:
        raise ValueError("order must be nonnegative")
    g = tuple(average(SymFunc.h(mu.size + k), mu, 2, n) for k in range(order + 1))
    out = WgSeries(n, mu, g)
    if check:
        formal = wg_formal_series(n, mu, mu.size + order + 1)
        if any(formal[:mu.size]) or formal[mu.size:] != out.signed():
            raise SeriesMismatchError(f"1/N expansions disagree for n={n}, mu={mu}")
    return out


def _delta(indices: Sequence[int], matching) -> bool:
    return all(indices[a - 1] == indices[b - 1] for a, b in matching)


def integrate_monomial(i: Sequence[int], j: Sequence[int], N: int) -> Fraction:
    """Haar integral of ``g_{i1 j1} g_{i2 j2} ... g_{i2n j2n}`` over O(N)."""
    i, j = tuple(i), tuple(j)
    if len(i) != len(j):
        raise ValueError("index sequences must have equal length")
    if len(i) % 2:
        raise ValueError("only even-degree monomials are supported (odd ones integrate to 0)")
    for seq in (i, j):
        if any(not 1 <= x <= N for x in seq):
            raise ValueError(f"indices must lie in 1..{N}: {seq}")
    n = len(i) // 2
    if n == 0:
        return Fraction(1)
    wg = wg_exact(n, N)
    matchings = enumerate_matchings(n)
    left = [matching_to_permutation(m) for m in matchings if _delta(i, m)]
    right = [matching_to_permutation(m) for m in matchings if _delta(j, m)]
    total = Fraction(0)
    for a in left:
        a_inv = inverse(a)
        for b in right:
            total += wg.at(compose(a_inv, b))
    return total


def integrate_diagonal(n: int, N: int) -> Fraction:
    """``int g_11^2 g_22^2 ... g_nn^2 dg`` over O(N)."""
    idx = tuple(k for k in range(1, n + 1) for _ in range(2))
    return integrate_monomial(idx, idx, N)
