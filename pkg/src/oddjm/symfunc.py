"""Symmetric functions stored in the power-sum basis.

A :class:`SymFunc` is a finite rational combination ``sum a(rho) p_rho``; the
empty partition keys the constant term.  Monomial, elementary and complete
functions are converted to power sums when they are built.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Iterable, Mapping

from .partition import Partition, partitions, z_value

__all__ = [
    "SymFunc",
    "SymFuncSyntaxError",
    "basis_element",
    "p_to_m",
    "m_to_p",
    "parse",
    "evaluate",
]


@cache
def p_to_m(rho: Partition) -> dict[Partition, int]:
    """Monomial expansion of ``p_rho`` (integer coefficients)."""
    rho = Partition(rho)
    if not rho:
        return {Partition(): 1}
    r, rest = rho[-1], p_to_m(Partition(rho[:-1]))
    out: dict[Partition, int] = {}
    for mu, c in rest.items():
        # multiply m_mu by p_r: raise one part (or a new zero part) by r
        seen = set()
        for idx in range(len(mu) + 1):
            old = mu[idx] if idx < len(mu) else 0
            if old in seen:
                continue
            seen.add(old)
            parts = list(mu)
            if idx < len(mu):
                parts[idx] += r
            else:
                parts.append(r)
            nu = Partition(sorted(parts, reverse=True))
            coeff = c * nu.count(old + r)
            # each distinct old value contributes once; its multiplicity in mu
            # is accounted for by the multiplicity of the new value in nu
            out[nu] = out.get(nu, 0) + coeff
    return out


@cache
def _m_to_p_degree(n: int) -> dict[Partition, dict[Partition, Fraction]]:
    """Invert the unitriangular-up-to-scaling p->m transition at degree n."""
    table: dict[Partition, dict[Partition, Fraction]] = {}
    # reverse-lex order: every coarsening of mu precedes mu
    for mu in partitions(n):
        row = p_to_m(mu)
        acc: dict[Partition, Fraction] = {mu: Fraction(1)}
        for nu, c in row.items():
            if nu == mu:
                continue
            for rho, d in table[nu].items():
                acc[rho] = acc.get(rho, 0) - c * d
        diag = row[mu]
        table[mu] = {rho: Fraction(v) / diag for rho, v in acc.items() if v}
    return table


def m_to_p(lam: Iterable[int]) -> dict[Partition, Fraction]:
    lam = Partition(lam)
    return dict(_m_to_p_degree(lam.size)[lam])


class SymFunc:
    """Rational combination of power sums ``p_rho`` (not necessarily homogeneous)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Iterable[int], object] | None = None):
        clean: dict[Partition, Fraction] = {}
        for rho, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[Partition(rho)] = c
        self.terms = clean

    # constructors
    @classmethod
    def constant(cls, c) -> "SymFunc":
        return cls({(): c})

    @classmethod
    def p(cls, *parts: int) -> "SymFunc":
        return cls({Partition(sorted(parts, reverse=True)): 1})

    @classmethod
    def m(cls, *parts: int) -> "SymFunc":
        return cls(m_to_p(Partition(sorted(parts, reverse=True))))

    @classmethod
    def e(cls, *parts: int) -> "SymFunc":
        return _product(_elementary(k) for k in parts)

    @classmethod
    def h(cls, *parts: int) -> "SymFunc":
        return _product(_complete(k) for k in parts)

    # ring structure
    def __add__(self, other) -> "SymFunc":
        other = _coerce(other)
        out = dict(self.terms)
        for rho, c in other.terms.items():
            out[rho] = out.get(rho, 0) + c
        return SymFunc(out)

    __radd__ = __add__

    def __neg__(self) -> "SymFunc":
        return SymFunc({rho: -c for rho, c in self.terms.items()})

    def __sub__(self, other) -> "SymFunc":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "SymFunc":
        return _coerce(other) - self

    def __mul__(self, other) -> "SymFunc":
        if not isinstance(other, SymFunc):
            c = Fraction(other)
            return SymFunc({rho: c * v for rho, v in self.terms.items()})
        out: dict[Partition, Fraction] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                key = Partition(sorted(a + b, reverse=True))
                out[key] = out.get(key, 0) + ca * cb
        return SymFunc(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SymFunc":
        out = SymFunc.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            try:
                other = _coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    # structure
    @property
    def degree(self) -> int:
        return max((rho.size for rho in self.terms), default=0)

    @property
    def degree_bound(self) -> int:
        """``max(|rho| + l(rho))`` over the support; controls the polynomial degree of averages."""
        return max((rho.size + rho.length for rho in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({rho.size for rho in self.terms}) <= 1

    def homogeneous_components(self) -> dict[int, "SymFunc"]:
        comps: dict[int, dict[Partition, Fraction]] = {}
        for rho, c in self.terms.items():
            comps.setdefault(rho.size, {})[rho] = c
        return {d: SymFunc(t) for d, t in sorted(comps.items())}

    def to_monomial(self) -> dict[Partition, Fraction]:
        out: dict[Partition, Fraction] = {}
        for rho, c in self.terms.items():
            for lam, r in p_to_m(rho).items():
                out[lam] = out.get(lam, 0) + c * r
        return {lam: v for lam, v in sorted(out.items()) if v}

    def evaluate(self, alphabet: Iterable) -> Fraction:
        return evaluate(self, alphabet)

    def __call__(self, alphabet: Iterable) -> Fraction:
        return evaluate(self, alphabet)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for rho in sorted(self.terms):
            c = self.terms[rho]
            body = f"p[{','.join(map(str, rho))}]" if rho else ""
            mag = abs(c)
            if body:
                text = body if mag == 1 else f"{mag}*{body}"
            else:
                text = str(mag)
            if not pieces:
                pieces.append(("-" if c < 0 else "") + text)
            else:
                pieces.append((" - " if c < 0 else " + ") + text)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"SymFunc({str(self)!r})"


def _coerce(x) -> SymFunc:
    if isinstance(x, SymFunc):
        return x
    return SymFunc.constant(Fraction(x))


def _product(factors: Iterable[SymFunc]) -> SymFunc:
    out = SymFunc.constant(1)
    for f in factors:
        out = out * f
    return out


@cache
def _elementary(k: int) -> SymFunc:
    return SymFunc(
        {rho: Fraction((-1) ** (k - rho.length), z_value(rho)) for rho in partitions(k)}
    )


@cache
def _complete(k: int) -> SymFunc:
    return SymFunc({rho: Fraction(1, z_value(rho)) for rho in partitions(k)})


def basis_element(kind: str, lam: Iterable[int]) -> SymFunc:
    """``m_lam``, ``e_lam``, ``h_lam`` or ``p_lam`` expressed in power sums."""
    parts = tuple(Partition(sorted(lam, reverse=True)))
    try:
        return getattr(SymFunc, {"m": "m", "e": "e", "h": "h", "p": "p"}[kind])(*parts)
    except KeyError:
        raise ValueError(f"unknown basis {kind!r}; expected one of m, e, h, p") from None


def evaluate(F: SymFunc, alphabet: Iterable) -> Fraction:
    """Substitute a finite multiset of rationals (padded with zeros)."""
    values = [Fraction(a) for a in alphabet]
    power: dict[int, Fraction] = {}
    total = Fraction(0)
    for rho, c in F.terms.items():
        term = c
        for k in rho:
            if k not in power:
                power[k] = sum((a ** k for a in values), Fraction(0))
            term *= power[k]
        total += term
    return total


class SymFuncSyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<atom>[mehp])\[(?P<parts>[\d,\s]*)\]|(?P<op>[-+*]))")


def parse(text: str) -> SymFunc:
    """Parse expressions such as ``"h[3]"`` or ``"1/2*p[2] + 1/2*p[1,1] - e[2]*e[1]"``."""
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            raise SymFuncSyntaxError("unexpected character", text, len(text) - len(text[pos:].lstrip()))
        start = match.start() + (len(match.group(0)) - len(match.group(0).lstrip()))
        if match.group("num"):
            tokens.append(("num", Fraction(match.group("num")), start))
        elif match.group("atom"):
            inner = match.group("parts")
            try:
                parts = [int(t) for t in inner.split(",") if t.strip()]
            except ValueError:
                raise SymFuncSyntaxError("bad partition", text, start) from None
            if any(p <= 0 for p in parts):
                raise SymFuncSyntaxError("parts must be positive", text, start)
            tokens.append(("atom", basis_element(match.group("atom"), parts), start))
        else:
            tokens.append(("op", match.group("op"), start))
        pos = match.end()
    if not tokens:
        raise SymFuncSyntaxError("empty expression", text, 0)

    idx = 0

    def factor():
        nonlocal idx
        if idx >= len(tokens):
            raise SymFuncSyntaxError("expected a term", text, len(text))
        kind, value, where = tokens[idx]
        if kind == "num":
            idx += 1
            return SymFunc.constant(value)
        if kind == "atom":
            idx += 1
            return value
        raise SymFuncSyntaxError(f"unexpected {value!r}", text, where)

    def term():
        nonlocal idx
        out = factor()
        while idx < len(tokens) and tokens[idx][:2] == ("op", "*"):
            idx += 1
            out = out * factor()
        return out

    sign = 1
    if tokens[0][0] == "op" and tokens[0][1] in "+-":
        sign = -1 if tokens[0][1] == "-" else 1
        idx = 1
    result = term() * sign
    while idx < len(tokens):
        kind, value, where = tokens[idx]
        if kind != "op" or value not in "+-":
            raise SymFuncSyntaxError(f"expected '+' or '-', got {value!r}" if kind == "op" else "expected '+' or '-'", text, where)
        idx += 1
        t = term()
        result = result + t if value == "+" else result - t
    return result
