"""Numerical evidence for four open questions about the averages at alpha = 2.

* ``hecke_generation_rank(n)``: rank of the span of ``e_lam(J_1, J_3, ...) P_n``
  inside the Hecke algebra, compared with its dimension p(n).
* ``alpha_independence(k)``: for ``lam, mu |- k`` the average of ``m_lam`` on
  mu should not depend on n or alpha.
* ``n_independence(F, alphas)``: for homogeneous F of degree k and ``mu |- k-1``
  the average should not depend on n.
* ``area_of_catalan_paths(k)``: the second Weingarten coefficient for a
  one-row type (k) should equal ``4^k - binom(2k+1, k)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

from .averages import average_poly
from .group_algebra import eval_symfunc_at_odd_jm, m_coefficients_fast
from .partition import Partition, partitions, reduce
from .symfunc import SymFunc

__all__ = [
    "Observation",
    "exact_rank",
    "hecke_generation_rank",
    "alpha_independence",
    "n_independence",
    "second_order_coefficient",
    "area_of_catalan_paths",
    "catalan_area",
    "SAMPLE_ALPHAS",
]

SAMPLE_ALPHAS = (Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))


@dataclass(frozen=True)
class Observation:
    label: str
    holds: bool
    detail: str


def exact_rank(rows: list[list[Fraction]]) -> int:
    """Rank of a rational matrix by fraction-exact row reduction."""
    rows = [[Fraction(x) for x in r] for r in rows if any(r)]
    rank = 0
    width = max((len(r) for r in rows), default=0)
    for col in range(width):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / lead[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], lead)]
        rank += 1
    return rank


def _generators(n: int, max_degree: int) -> list[Partition]:
    # e_k(J_1, J_3, ..., J_{2n-1}) vanishes for k >= n since J_1 = 0
    return [lam for d in range(max_degree + 1) for lam in partitions(d) if not lam or lam[0] < n]


def hecke_generation_rank(n: int, max_degree: int | None = None, limit: int | None = None) -> Observation:
    """Brute-force rank of ``{e_lam(J_1, J_3, ..., J_{2n-1}) P_n}`` in the psi basis."""
    if max_degree is None:
        max_degree = 2 * (n - 1)
    types = sorted(reduce(lam) for lam in partitions(n))
    rows = []
    for lam in _generators(n, max_degree):
        w = eval_symfunc_at_odd_jm(SymFunc.e(*lam), n, limit=limit)
        coeffs = m_coefficients_fast(w)
        rows.append([Fraction(coeffs.get(mu, 0)) for mu in types])
    rank = exact_rank(rows)
    return Observation(
        f"hecke-generation n={n}",
        rank == len(types),
        f"rank {rank} of {len(rows)} products, dimension {len(types)}",
    )


def alpha_independence(k: int, alphas: Iterable = SAMPLE_ALPHAS) -> list[Observation]:
    """Averages of ``m_lam`` on ``mu`` with ``|lam| = |mu| = k`` are constants, equal for all alphas."""
    alphas = tuple(alphas)
    out = []
    for lam in partitions(k):
        F = SymFunc.m(*lam)
        for mu in partitions(k):
            polys = [average_poly(F, mu, a) for a in alphas]
            values = {str(p) for p in polys}
            ok = all(p.is_constant() for p in polys) and len(values) == 1
            out.append(Observation(f"m[{lam}] on {mu}", ok, ", ".join(sorted(values))))
    return out


def n_independence(F: SymFunc, alphas: Iterable = SAMPLE_ALPHAS) -> list[Observation]:
    """For homogeneous F of degree k, averages on every ``mu |- k-1`` are constant in n."""
    if not F.is_homogeneous():
        raise ValueError("F must be homogeneous")
    k = F.degree
    out = []
    for mu in partitions(k - 1) if k >= 1 else ():
        for a in alphas:
            p = average_poly(F, mu, a)
            out.append(Observation(f"{F} on {mu} at alpha={a}", p.is_constant(), str(p)))
    return out


def second_order_coefficient(mu: Iterable[int]) -> Fraction:
    """``G^{|mu|+1}_mu``: the alpha = 2 average of ``h_{|mu|+1}`` on mu, if constant in n."""
    mu = Partition(mu)
    p = average_poly(SymFunc.h(mu.size + 1), mu, 2)
    if not p.is_constant():
        raise ValueError(f"average on {mu} depends on n: {p}")
    return p[0]


def catalan_area(k: int) -> int:
    return 4 ** k - comb(2 * k + 1, k)


def area_of_catalan_paths(k: int) -> Observation:
    p = average_poly(SymFunc.h(k + 1), (k,), 2)
    expected = catalan_area(k)
    ok = p.is_constant() and p[0] == expected
    return Observation(f"G^{k + 1}_({k})", ok, f"{p} (expected {expected})")
