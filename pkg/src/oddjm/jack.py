"""Jack functions J_lam^(alpha), their power-sum coefficients theta, and the
Jack-Plancherel measure.

J_lam is obtained by Gram-Schmidt orthogonalisation of the monomial functions
under ``<p_rho, p_pi> = delta alpha^l(rho) z_rho``, processing partitions in
increasing lexicographic order (a linear extension of dominance), and is then
scaled so that the coefficient of ``p_1^n`` equals 1.  Triangularity in the
monomial basis and ``<J_lam, J_lam> = j_lam`` are checked by the test-suite,
not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Iterable

from .partition import (
    Partition,
    _check_alpha,
    hook_product,
    j_alpha,
    partitions,
    unreduce,
    z_value,
)
from .symfunc import SymFunc, m_to_p, p_to_m

__all__ = [
    "JackTable",
    "jack_table",
    "theta",
    "theta_hat",
    "jack_function",
    "jack_in_monomial",
    "jack_plancherel",
    "character",
    "zonal_spherical",
    "inner_product",
]


@dataclass(frozen=True)
class JackTable:
    """Power-sum coefficients ``theta[lam][rho]`` of all J_lam with ``|lam| = n``."""

    n: int
    alpha: Fraction
    theta: dict[Partition, dict[Partition, Fraction]] = field(repr=False)

    def __getitem__(self, key: tuple[Iterable[int], Iterable[int]]) -> Fraction:
        lam, rho = key
        return self.theta[Partition(lam)].get(Partition(rho), Fraction(0))

    def tsv(self) -> str:
        """Rows lam, columns rho, both in reverse-lexicographic order."""
        parts = partitions(self.n)
        lines = ["lambda\\rho\t" + "\t".join(str(r) for r in parts)]
        for lam in parts:
            lines.append(str(lam) + "\t" + "\t".join(str(self[lam, r]) for r in parts))
        return "\n".join(lines)


def inner_product(f: dict, g: dict, alpha) -> Fraction:
    """alpha-deformed Hall product of two power-sum coefficient maps."""
    alpha = Fraction(alpha)
    if len(g) < len(f):
        f, g = g, f
    total = Fraction(0)
    for rho, c in f.items():
        d = g.get(rho)
        if d:
            total += c * d * alpha ** len(rho) * z_value(rho)
    return total


@cache
def _jack_table(n: int, alpha: Fraction) -> JackTable:
    order = sorted(partitions(n))[::-1]  # (1^n) first: increasing lexicographic
    weight = {rho: alpha ** len(rho) * z_value(rho) for rho in partitions(n)}
    done: list[tuple[dict[Partition, Fraction], Fraction]] = []
    theta: dict[Partition, dict[Partition, Fraction]] = {}
    for lam in order:
        vec = dict(m_to_p(lam))
        for prev, norm in done:
            coeff = sum((c * prev[r] * weight[r] for r, c in vec.items() if r in prev), Fraction(0)) / norm
            if coeff:
                for r, c in prev.items():
                    vec[r] = vec.get(r, 0) - coeff * c
        vec = {r: c for r, c in vec.items() if c}
        norm = sum((c * c * weight[r] for r, c in vec.items()), Fraction(0))
        done.append((vec, norm))
        lead = vec[Partition((1,) * n)] if n else Fraction(1)
        theta[lam] = {r: c / lead for r, c in vec.items()}
    return JackTable(n, alpha, theta)


def jack_table(n: int, alpha) -> JackTable:
    return _jack_table(n, _check_alpha(alpha))


def theta(lam: Iterable[int], rho: Iterable[int], alpha) -> Fraction:
    """Coefficient of ``p_rho`` in ``J_lam^(alpha)``."""
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValueError(f"size mismatch: |{lam}| != |{rho}|")
    return jack_table(lam.size, alpha)[lam, rho]


def theta_hat(lam: Iterable[int], mu: Iterable[int], alpha) -> Fraction:
    """``theta^lam_{mu + (1^{|lam|-|mu|})}``, zero when ``|mu| + l(mu) > |lam|``."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size < mu.size + mu.length:
        return Fraction(0)
    return jack_table(lam.size, alpha)[lam, unreduce(mu, lam.size)]


def jack_function(lam: Iterable[int], alpha) -> SymFunc:
    lam = Partition(lam)
    return SymFunc(jack_table(lam.size, alpha).theta[lam])


def jack_in_monomial(lam: Iterable[int], alpha) -> dict[Partition, Fraction]:
    """Monomial coefficients ``u_{lam mu}`` of J_lam; supported on ``mu <= lam`` in dominance."""
    return jack_function(lam, alpha).to_monomial()


def jack_plancherel(lam: Iterable[int], alpha) -> Fraction:
    """``alpha^n n! / j_lam``; a probability distribution on partitions of n."""
    alpha = _check_alpha(alpha)
    lam = Partition(lam)
    return alpha ** lam.size * factorial(lam.size) / j_alpha(lam, alpha)


def character(lam: Iterable[int], rho: Iterable[int]) -> int:
    """Irreducible character value ``chi^lam`` on the class of cycle type rho."""
    lam, rho = Partition(lam), Partition(rho)
    value = theta(lam, rho, 1) * z_value(rho) / hook_product(lam)
    assert value.denominator == 1
    return value.numerator


def zonal_spherical(lam: Iterable[int], rho: Iterable[int]) -> Fraction:
    """Value of the zonal spherical function ``omega^lam`` on the double coset of type rho."""
    lam, rho = Partition(lam), Partition(rho)
    return theta(lam, rho, 2) * z_value(rho) / (2 ** (rho.size - rho.length) * factorial(rho.size))
