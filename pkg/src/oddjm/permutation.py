"""Permutations of S_m, perfect matchings of {1..2n} and coset types.

A permutation is a plain tuple ``images`` with ``images[i] == sigma(i+1)``;
composition follows ``(s o t)(i) = s(t(i))``.  Plain tuples keep the
group-algebra dictionaries small and fast.
"""

from __future__ import annotations

from itertools import permutations as _itertools_permutations, product
from typing import Iterable, Iterator, Sequence

from .partition import Partition, reduce

Permutation = tuple  # images, 1-based

__all__ = [
    "Permutation",
    "Matching",
    "identity",
    "transposition",
    "from_cycles",
    "compose",
    "inverse",
    "cycles",
    "cycle_type",
    "reduced_cycle_type",
    "sign",
    "coset_type",
    "reduced_coset_type",
    "coset_length",
    "is_hyperoctahedral",
    "hyperoctahedral_group",
    "hyperoctahedral_generators",
    "enumerate_matchings",
    "matching_to_permutation",
    "permutation_to_matching",
    "canonical_matching",
    "canonical_permutation",
    "matching_action",
    "format_permutation",
    "parse_permutation",
    "format_cycles",
    "all_permutations",
]


def identity(m: int) -> Permutation:
    return tuple(range(1, m + 1))


def transposition(i: int, j: int, m: int) -> Permutation:
    images = list(range(1, m + 1))
    images[i - 1], images[j - 1] = j, i
    return tuple(images)


def from_cycles(cycle_list: Iterable[Sequence[int]], m: int) -> Permutation:
    """Build a permutation of {1..m} from disjoint cycles, e.g. ``[(1, 2, 3), (4, 5)]``."""
    images = list(range(1, m + 1))
    for cyc in cycle_list:
        for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
            images[a - 1] = b
    perm = tuple(images)
    if sorted(perm) != list(range(1, m + 1)):
        raise ValueError(f"cycles {cycle_list} are not disjoint")
    return perm


def _check_same_degree(s: Sequence[int], t: Sequence[int]) -> None:
    if len(s) != len(t):
        raise ValueError(f"degree mismatch: {len(s)} vs {len(t)}")


def compose(s: Permutation, t: Permutation) -> Permutation:
    _check_same_degree(s, t)
    return tuple(s[j - 1] for j in t)


def inverse(s: Permutation) -> Permutation:
    out = [0] * len(s)
    for i, v in enumerate(s, start=1):
        out[v - 1] = i
    return tuple(out)


def cycles(s: Permutation) -> list[tuple[int, ...]]:
    seen = [False] * len(s)
    out = []
    for start in range(1, len(s) + 1):
        if seen[start - 1]:
            continue
        cyc = []
        k = start
        while not seen[k - 1]:
            seen[k - 1] = True
            cyc.append(k)
            k = s[k - 1]
        out.append(tuple(cyc))
    return out


def cycle_type(s: Permutation) -> Partition:
    return Partition(sorted((len(c) for c in cycles(s)), reverse=True))


def reduced_cycle_type(s: Permutation) -> Partition:
    return reduce(cycle_type(s))


def sign(s: Permutation) -> int:
    return -1 if (len(s) - len(cycles(s))) % 2 else 1


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def coset_type(s: Sequence[int]) -> Partition:
    """Half-sizes of the connected components of the two-coloured graph of s.

    Red edges join ``2i-1, 2i``; blue edges join ``s(2i-1), s(2i)``.  The
    result labels the double coset ``H_n s H_n``.
    """
    m = len(s)
    if m % 2:
        raise ValueError(f"coset type needs even degree, got {m}")
    parent = list(range(m + 1))
    for i in range(1, m, 2):
        for a, b in ((i, i + 1), (s[i - 1], s[i])):
            ra, rb = _find(parent, a), _find(parent, b)
            if ra != rb:
                parent[ra] = rb
    sizes: dict[int, int] = {}
    for v in range(1, m + 1):
        r = _find(parent, v)
        sizes[r] = sizes.get(r, 0) + 1
    return Partition(sorted((c // 2 for c in sizes.values()), reverse=True))


def reduced_coset_type(s: Sequence[int]) -> Partition:
    return reduce(coset_type(s))


def coset_length(s: Sequence[int]) -> int:
    """Number of components of the graph of s (the length of its coset type)."""
    return len(coset_type(s))


def is_hyperoctahedral(s: Permutation) -> bool:
    n = len(s) // 2
    return coset_type(s) == (1,) * n


def hyperoctahedral_group(n: int) -> list[Permutation]:
    """All ``2^n n!`` elements of H_n, the centralizer of (1 2)(3 4)...(2n-1 2n)."""
    out = []
    for blocks in _itertools_permutations(range(1, n + 1)):
        for flips in product((0, 1), repeat=n):
            images = [0] * (2 * n)
            for i, (b, f) in enumerate(zip(blocks, flips)):
                images[2 * i] = 2 * b - 1 + f
                images[2 * i + 1] = 2 * b - f
            out.append(tuple(images))
    out.sort()
    return out


def hyperoctahedral_generators(n: int) -> list[Permutation]:
    """Involutions generating H_n: (2i-1 2i) and (2i-1 2i+1)(2i 2i+2)."""
    m = 2 * n
    gens = [transposition(2 * i - 1, 2 * i, m) for i in range(1, n + 1)]
    for i in range(1, n):
        gens.append(from_cycles([(2 * i - 1, 2 * i + 1), (2 * i, 2 * i + 2)], m))
    return gens


def all_permutations(m: int) -> Iterator[Permutation]:
    return _itertools_permutations(range(1, m + 1))


class Matching(tuple):
    """A perfect matching of {1..2n} stored as its canonical sorted tuple of blocks.

    Each block ``(a, b)`` has ``a < b`` and blocks are ordered by their smaller
    element, so equality is structural.
    """

    __slots__ = ()

    def __new__(cls, blocks: Iterable[Iterable[int]]) -> "Matching":
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
        points = sorted(x for b in canon for x in b)
        if any(len(b) != 2 for b in canon) or points != list(range(1, len(points) + 1)):
            raise ValueError(f"not a perfect matching of {{1..2n}}: {canon}")
        return super().__new__(cls, canon)

    @property
    def n(self) -> int:
        return len(self)

    def __str__(self) -> str:
        return "".join(f"{{{a},{b}}}" for a, b in self)

    def __repr__(self) -> str:
        return f"Matching({str(self)!r})"


def enumerate_matchings(n: int) -> list[Matching]:
    """All (2n-1)!! matchings; the smallest free point is paired with each larger one in turn."""

    def rec(free: tuple[int, ...]):
        if not free:
            yield ()
            return
        a, rest = free[0], free[1:]
        for idx, b in enumerate(rest):
            for tail in rec(rest[:idx] + rest[idx + 1:]):
                yield ((a, b),) + tail

    return [Matching(blocks) for blocks in rec(tuple(range(1, 2 * n + 1)))]


def matching_to_permutation(m: Matching) -> Permutation:
    return tuple(x for block in m for x in block)


def permutation_to_matching(s: Sequence[int]) -> Matching:
    """The matching ``{ {s(1), s(2)}, {s(3), s(4)}, ... }``, i.e. s applied to the trivial matching."""
    return Matching((s[i], s[i + 1]) for i in range(0, len(s), 2))


def matching_action(s: Permutation, m: Matching) -> Matching:
    if len(s) != 2 * len(m):
        raise ValueError(f"degree mismatch: permutation of {len(s)} vs matching of {2 * len(m)}")
    return Matching((s[a - 1], s[b - 1]) for a, b in m)


def _check_room(mu: Sequence[int], n: int) -> None:
    if n < sum(mu) + len(mu):
        raise ValueError(f"n={n} is too small for mu={tuple(mu)}")


def canonical_matching(mu: Iterable[int], n: int) -> Matching:
    """Reference matching of reduced coset type mu.

    Part ``r`` occupies ``2(r+1)`` consecutive points starting after offset
    ``s`` and contributes ``{s+1, s+2r+2}, {s+2, s+3}, ..., {s+2r, s+2r+1}``;
    the remaining points carry trivial blocks.
    """
    mu = tuple(mu)
    _check_room(mu, n)
    blocks = []
    s = 0
    for r in mu:
        blocks.append((s + 1, s + 2 * r + 2))
        blocks.extend((s + 2 * t, s + 2 * t + 1) for t in range(1, r + 1))
        s += 2 * r + 2
    blocks.extend((k, k + 1) for k in range(s + 1, 2 * n, 2))
    return Matching(blocks)


def canonical_permutation(mu: Iterable[int], n: int) -> Permutation:
    """``(1 2 ... mu_1+1)(mu_1+2 ... mu_1+mu_2+2)...`` in S_n."""
    mu = tuple(mu)
    _check_room(mu, n)
    cyc, start = [], 1
    for r in mu:
        cyc.append(tuple(range(start, start + r + 1)))
        start += r + 1
    return from_cycles(cyc, n)


def format_permutation(s: Permutation) -> str:
    return " ".join(map(str, s))


def parse_permutation(text: str) -> Permutation:
    perm = tuple(int(t) for t in text.replace(",", " ").split())
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"not a permutation in one-line notation: {text!r}")
    return perm


def format_cycles(s: Permutation) -> str:
    nontrivial = [c for c in cycles(s) if len(c) > 1]
    if not nontrivial:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)
