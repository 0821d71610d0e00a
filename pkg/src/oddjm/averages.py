"""Jack-Plancherel averages of content evaluations, and shifted symmetric functions.

For a symmetric function F, a partition mu and ``alpha > 0`` the average is

    A_mu(F, n) = alpha^(deg F - |mu|) z_{mu+1^(n-|mu|)} / n!
                 * sum_{lam |- n} F(A_lam) P_n(lam) theta^lam_{mu+1^(n-|mu|)}

where ``A_lam`` is the alpha-content alphabet of lam.  Inhomogeneous F is
handled one homogeneous component at a time.  At alpha = 1 these are the
class-sum coefficients of F(J_1, ..., J_n); at alpha = 2 the double-coset
coefficients of F(J_1, J_3, ..., J_{2n-1}) P_n.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .jack import jack_plancherel, jack_table
from .partition import (
    Partition,
    _check_alpha,
    catalan,
    content_alphabet,
    falling_factorial,
    partitions,
    refined_catalan,
    unreduce,
    z_value,
)
from .symfunc import SymFunc

__all__ = [
    "PolyN",
    "AvgSpec",
    "InterpolationError",
    "average",
    "average_at",
    "average_poly",
    "average_expansion",
    "interpolate",
    "stirling2",
    "shifted_power_eval",
    "shifted_jack_eval",
    "refined_catalan_sum",
    "catalan_product",
]


class InterpolationError(ArithmeticError):
    """The redundant interpolation node disagreed with the interpolant."""


@dataclass(frozen=True)
class PolyN:
    """Polynomial in n with exact coefficients in ascending order of powers."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_constant(self) -> bool:
        return self.degree <= 0

    def __call__(self, n) -> Fraction:
        out = Fraction(0)
        for c in reversed(self.coefficients):
            out = out * n + c
        return out

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else Fraction(0)

    def __repr__(self) -> str:
        return f"PolyN({str(self)!r})"

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        out = []
        for k, c in enumerate(self.coefficients):
            body = str(abs(c)) + ("" if k == 0 else "*n" if k == 1 else f"*n^{k}")
            if k == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)


@dataclass(frozen=True)
class AvgSpec:
    F: SymFunc
    mu: Partition
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "mu", Partition(self.mu))
        object.__setattr__(self, "alpha", _check_alpha(self.alpha))


@cache
def _content_power_sums(lam: Partition, alpha: Fraction, k: int) -> Fraction:
    return sum((a ** k for a in content_alphabet(lam, alpha)), Fraction(0))


def _content_eval(F: SymFunc, lam: Partition, alpha: Fraction) -> Fraction:
    total = Fraction(0)
    for rho, c in F.terms.items():
        total += c * prod((_content_power_sums(lam, alpha, k) for k in rho), start=Fraction(1))
    return total


def average(F: SymFunc, mu: Iterable[int], alpha, n: int) -> Fraction:
    mu = Partition(mu)
    alpha = _check_alpha(alpha)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n < mu.size + mu.length:
        return Fraction(0)
    nu = unreduce(mu, n)
    table = jack_table(n, alpha)
    weights = {
        lam: jack_plancherel(lam, alpha) * table[lam, nu] for lam in partitions(n)
    }
    prefactor = Fraction(z_value(nu), factorial(n))
    total = Fraction(0)
    for d, comp in F.homogeneous_components().items():
        s = sum((_content_eval(comp, lam, alpha) * w for lam, w in weights.items() if w), Fraction(0))
        total += alpha ** (d - mu.size) * s
    return prefactor * total


def average_at(spec: AvgSpec, n: int) -> Fraction:
    return average(spec.F, spec.mu, spec.alpha, n)


def average_expansion(F: SymFunc, alpha, n: int) -> dict[Partition, Fraction]:
    """``{mu: A_mu(F, n)}`` over all reduced types mu with ``|mu| + l(mu) <= n`` (zeros dropped)."""
    out = {}
    for lam in partitions(n):
        mu = Partition(p - 1 for p in lam)
        value = average(F, mu, alpha, n)
        if value:
            out[mu] = value
    return dict(sorted(out.items()))


def interpolate(xs: Sequence, ys: Sequence) -> PolyN:
    """Exact Newton interpolation through the points ``(xs[i], ys[i])``."""
    xs = [Fraction(x) for x in xs]
    diffs = [Fraction(y) for y in ys]
    newton = [diffs[0]]
    for level in range(1, len(xs)):
        diffs = [
            (diffs[i + 1] - diffs[i]) / (xs[i + level] - xs[i]) for i in range(len(diffs) - 1)
        ]
        newton.append(diffs[0])
    # expand sum newton[k] prod_{i<k} (n - xs[i]) into ascending coefficients
    coeffs = [Fraction(0)] * len(xs)
    basis = [Fraction(1)]
    for k, c in enumerate(newton):
        for i, b in enumerate(basis):
            coeffs[i] += c * b
        if k < len(xs) - 1:
            nxt = [Fraction(0)] * (len(basis) + 1)
            for i, b in enumerate(basis):
                nxt[i + 1] += b
                nxt[i] -= xs[k] * b
            basis = nxt
    return PolyN(coeffs)


def average_poly(F: SymFunc, mu: Iterable[int], alpha) -> PolyN:
    """``A_mu(F, n)`` as a polynomial in n, valid for ``n >= |mu| + l(mu)``.

    The degree is at most ``max(|rho| + l(rho)) - (|mu| + l(mu))`` over the
    power-sum support of F; one node beyond what that bound needs is
    evaluated and must agree with the interpolant.
    """
    mu = Partition(mu)
    alpha = _check_alpha(alpha)
    n0 = mu.size + mu.length
    bound = max(F.degree_bound - n0, 0)
    nodes = list(range(n0, n0 + bound + 2))
    values = [average(F, mu, alpha, n) for n in nodes]
    poly = interpolate(nodes[:-1], values[:-1])
    if poly(nodes[-1]) != values[-1]:
        raise InterpolationError(
            f"average for mu={mu}, alpha={alpha} is not a polynomial of degree <= {bound}"
        )
    return poly


@cache
def stirling2(k: int, m: int) -> int:
    """Stirling numbers of the second kind, ``u^k = sum_m S(k, m) u^(falling m)``."""
    if k == m:
        return 1
    if m == 0 or m > k:
        return 0
    return m * stirling2(k - 1, m) + stirling2(k - 1, m - 1)


def shifted_power_eval(k: int, lam: Iterable[int], alpha) -> Fraction:
    """``p*_k(lam; alpha)``; rows of length zero contribute nothing."""
    if k < 1:
        raise ValueError("k must be positive")
    alpha = _check_alpha(alpha)
    total = Fraction(0)
    for i, row in enumerate(lam):
        shift = Fraction(i) / alpha
        total += falling_factorial(row - shift, k) - falling_factorial(-shift, k)
    return total


def shifted_jack_eval(nu: Iterable[int], lam: Iterable[int], alpha) -> Fraction:
    """``J*_nu(lam; alpha)`` from the Hall-product formula in the power-sum basis."""
    nu, lam = Partition(nu), Partition(lam)
    alpha = _check_alpha(alpha)
    if nu.size > lam.size:
        raise ValueError(f"|nu|={nu.size} exceeds |lam|={lam.size}")
    extra = (1,) * (lam.size - nu.size)
    lifted = {
        Partition(sorted(rho + extra, reverse=True)): c
        for rho, c in jack_table(nu.size, alpha).theta[nu].items()
    }
    target = jack_table(lam.size, alpha).theta[lam]
    pairing = sum(
        (c * target[rho] * alpha ** len(rho) * z_value(rho) for rho, c in lifted.items() if rho in target),
        Fraction(0),
    )
    return falling_factorial(lam.size, nu.size) * pairing / (alpha ** lam.size * factorial(lam.size))


def _sub_multisets(pool: Counter, size: int, largest: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing tuples drawn from the multiset ``pool`` with the given sum."""
    if size == 0:
        yield ()
        return
    for part in sorted(pool, reverse=True):
        if part > min(size, largest) or not pool[part]:
            continue
        pool[part] -= 1
        for rest in _sub_multisets(pool, size - part, part):
            yield (part,) + rest
        pool[part] += 1


def refined_catalan_sum(lam: Iterable[int], mu: Iterable[int]) -> int:
    """``sum RC(lam^1) RC(lam^2) ...`` over ``lam^i |- mu_i`` whose union is lam.

    This is the closed form of the class coefficient of ``m_lam`` on reduced
    type mu when ``|lam| = |mu|``.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError("sizes of lam and mu must agree")

    def rec(pool: Counter, i: int) -> int:
        if i == len(mu):
            return 1 if not +pool else 0
        total = 0
        for piece in _sub_multisets(pool.copy(), mu[i], mu[i]):
            rest = pool.copy()
            rest.subtract(piece)
            total += refined_catalan(piece) * rec(rest, i + 1)
        return total

    return rec(Counter(lam), 0)


def catalan_product(mu: Iterable[int]) -> int:
    return prod((catalan(r) for r in mu), start=1)
