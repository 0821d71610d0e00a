"""Integer partitions, content alphabets and hook-type products.

Partitions are immutable tuples of positive parts in weakly decreasing order.
The zero partition is the empty tuple and prints as ``(0)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import factorial, prod
from typing import Iterable, Iterator

__all__ = [
    "Partition",
    "partitions",
    "parse_partition",
    "parse_rational",
    "format_rational",
    "conjugate",
    "z_value",
    "content_alphabet",
    "modified_content_alphabet",
    "hook_product",
    "dimension_f",
    "j_alpha",
    "reduce",
    "unreduce",
    "dominance_leq",
    "falling_factorial",
    "catalan",
    "refined_catalan",
]


class Partition(tuple):
    """A partition stored as a tuple of positive parts.

    Equality and hashing are those of the underlying tuple, so plain tuples can
    be used to look up dictionary entries keyed by partitions.  Ordering is by
    size first and reverse-lexicographic within equal size, i.e. ``(3)`` sorts
    before ``(2, 1)`` which sorts before ``(1, 1, 1)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        parts = tuple(p for p in parts if p)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts are not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def sort_key(self) -> tuple:
        return (sum(self), tuple(-p for p in self))

    def __lt__(self, other):
        return self.sort_key() < Partition(other).sort_key()

    def __le__(self, other):
        return self.sort_key() <= Partition(other).sort_key()

    def __gt__(self, other):
        return self.sort_key() > Partition(other).sort_key()

    def __ge__(self, other):
        return self.sort_key() >= Partition(other).sort_key()

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "(0)"

    def __repr__(self) -> str:
        return f"Partition({str(self)!r})"


def _parts_desc(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _parts_desc(n - first, first):
            yield (first,) + rest


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        return ()
    return tuple(Partition(p) for p in _parts_desc(n, n))


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1"``; ``"(0)"``, ``"0"`` and ``""`` give the zero partition."""
    text = text.strip()
    if text in ("", "(0)", "0", "()"):
        return Partition()
    text = text.strip("()[] ")
    try:
        parts = sorted((int(t) for t in text.split(",") if t.strip()), reverse=True)
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    return Partition(parts)


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def format_rational(x) -> str:
    return str(Fraction(x))


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def z_value(lam: Iterable[int]) -> int:
    """``prod_i i^{m_i} m_i!`` (order of the centralizer of a permutation of type lam)."""
    lam = tuple(lam)
    return prod(i ** lam.count(i) * factorial(lam.count(i)) for i in set(lam))


def _check_alpha(alpha) -> Fraction:
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return alpha


def content_alphabet(lam: Iterable[int], alpha=1) -> tuple[Fraction, ...]:
    """The alpha-contents ``(j-1) - (i-1)/alpha`` of the boxes of lam, row by row."""
    alpha = _check_alpha(alpha)
    return tuple(
        Fraction(j) - Fraction(i, 1) / alpha
        for i, row in enumerate(lam)
        for j in range(row)
    )


def modified_content_alphabet(lam: Iterable[int]) -> tuple[int, ...]:
    """The contents ``2j - i - 1`` (1-based box coordinates) used for the pair (S_2n, H_n)."""
    return tuple(2 * j - i for i, row in enumerate(lam) for j in range(row))


def hook_product(lam: Iterable[int]) -> int:
    lam = tuple(lam)
    lc = conjugate(lam)
    return prod(
        (row - j) + (lc[j] - i) - 1 for i, row in enumerate(lam) for j in range(row)
    )


def dimension_f(lam: Iterable[int]) -> int:
    """Number of standard Young tableaux of shape lam (hook-length formula)."""
    lam = tuple(lam)
    return factorial(sum(lam)) // hook_product(lam)


def j_alpha(lam: Iterable[int], alpha) -> Fraction:
    """Squared norm of the Jack function J_lam under the alpha-deformed Hall product."""
    alpha = _check_alpha(alpha)
    lam = tuple(lam)
    lc = conjugate(lam)
    out = Fraction(1)
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            arm = row - j
            leg = lc[j - 1] - i
            out *= (alpha * arm + leg + 1) * (alpha * arm + leg + alpha)
    return out


def reduce(lam: Iterable[int]) -> Partition:
    return Partition(p - 1 for p in lam)


def unreduce(mu: Iterable[int], n: int) -> Partition:
    """Inverse of :func:`reduce` on partitions of n: ``mu + (1^(n-|mu|))``."""
    mu = tuple(mu)
    if n < sum(mu) + len(mu):
        raise ValueError(f"n={n} is smaller than |mu|+l(mu) for mu={mu}")
    return Partition(tuple(p + 1 for p in mu) + (1,) * (n - sum(mu) - len(mu)))


def dominance_leq(mu: Iterable[int], lam: Iterable[int]) -> bool:
    mu, lam = tuple(mu), tuple(lam)
    if sum(mu) != sum(lam):
        return False
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu[i] if i < len(mu) else 0
        b += lam[i] if i < len(lam) else 0
        if a > b:
            return False
    return True


def falling_factorial(x, k: int):
    out = 1
    for i in range(k):
        out *= x - i
    return out


def catalan(k: int) -> int:
    return factorial(2 * k) // (factorial(k) * factorial(k + 1))


def refined_catalan(lam: Iterable[int]) -> int:
    lam = tuple(lam)
    if not lam:
        return 1
    size, length = sum(lam), len(lam)
    denom = factorial(size - length + 1) * prod(factorial(lam.count(i)) for i in set(lam))
    value, rem = divmod(factorial(size), denom)
    assert rem == 0
    return value
