"""Verification suites: exact identity checks, reference tables and conjecture evidence.

Each suite returns a list of :class:`Check` records.  Suites are addressed by
a descriptive name; a few alternative names are accepted too (see
:data:`ALIASES`).  The ``verify`` subcommand of the CLI runs them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import comb, factorial, prod
from typing import Callable, Iterable

from . import conjectures as conj
from .averages import (
    PolyN,
    average,
    average_poly,
    catalan_product,
    refined_catalan_sum,
    shifted_jack_eval,
    shifted_power_eval,
    stirling2,
)
from .group_algebra import (
    GroupAlgebraElement,
    class_expansion,
    coset_expansion,
    coset_sum,
    eval_symfunc_at_jm,
    eval_symfunc_at_odd_jm,
    hyperoctahedral_sum,
    m_coefficients_fast,
)
from .jack import character, jack_plancherel, jack_table, theta, theta_hat
from .partition import (
    Partition,
    content_alphabet,
    dimension_f,
    falling_factorial,
    j_alpha,
    modified_content_alphabet,
    parse_partition,
    partitions,
    unreduce,
    z_value,
)
from .permutation import all_permutations, cycle_type
from .symfunc import SymFunc, parse

__all__ = [
    "Check",
    "SUITES",
    "ALIASES",
    "run_suite",
    "resolve_suite",
    "golden",
    "MC_BATTERY",
]

ALPHAS = (Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def golden() -> dict:
    text = resources.files("oddjm").joinpath("data/golden.json").read_text()
    return json.loads(text)


def _check(name: str, passed: bool, detail: str = "") -> Check:
    return Check(name, bool(passed), detail)


# --- elementary symmetric functions of odd JM elements ---------------------------

def check_elementary(n: int, signed: bool = False) -> Check:
    """``e_k(J_1, J_3, ...) P_n = sum_{mu |- k} psi_mu(n)`` for all k < n, by brute force.

    With ``signed`` the sign-twisted sum ``P^eps_n`` is used and the right side
    picks up ``(-1)^k``.
    """
    P = hyperoctahedral_sum(n, signed=signed)
    bad = []
    for k in range(n):
        lhs = eval_symfunc_at_odd_jm(SymFunc.e(k), n, limit=n) * P
        rhs = GroupAlgebraElement.zero(2 * n)
        for mu in partitions(k):
            if mu.size + mu.length <= n:
                rhs = rhs + coset_sum(mu, n, signed=signed)
        if signed and k % 2:
            rhs = -rhs
        if lhs != rhs:
            bad.append(k)
    label = "twisted " if signed else ""
    return _check(f"{label}e_k P_n, n={n}", not bad, f"failing k: {bad}" if bad else f"k=0..{n - 1}")


# --- spherical functions ---------------------------------------------------------

def _character_element(lam: Partition) -> GroupAlgebraElement:
    m = lam.size
    values = {}
    for p in all_permutations(m):
        c = character(lam, cycle_type(p))
        if c:
            values[p] = c
    return GroupAlgebraElement(m, values)


def zonal_element(lam: Iterable[int]) -> GroupAlgebraElement:
    """``omega^lam = (2^n n!)^-1 chi^{2 lam} P_n`` as an explicit group-algebra element."""
    lam = Partition(lam)
    n = lam.size
    chi = _character_element(Partition(2 * p for p in lam))
    return (chi * hyperoctahedral_sum(n)).scale(Fraction(1, 2 ** n * factorial(n)))


def twisted_spherical_element(lam: Iterable[int]) -> GroupAlgebraElement:
    """``pi^lam = (2^n n!)^-1 chi^{lam u lam} P^eps_n``."""
    lam = Partition(lam)
    n = lam.size
    chi = _character_element(Partition(p for p in lam for _ in range(2)))
    return (chi * hyperoctahedral_sum(n, signed=True)).scale(Fraction(1, 2 ** n * factorial(n)))


EIGEN_FUNCTIONS = ("p[1]", "p[2]", "h[2]", "m[2,1]")


def check_eigenvalues(n: int, F_text: str) -> Check:
    """``F(J_1, J_3, ...) omega^lam = F(A'_lam) omega^lam`` for every lam |- n."""
    F = parse(F_text)
    w = eval_symfunc_at_odd_jm(F, n, limit=n)
    bad = []
    for lam in partitions(n):
        omega = zonal_element(lam)
        if w * omega != omega.scale(F(modified_content_alphabet(lam))):
            bad.append(str(lam))
    return _check(f"eigenvalues of {F_text}, n={n}", not bad, f"failing: {bad}" if bad else "")


def check_twisted_spectral(n: int, F_text: str) -> Check:
    """Spectral and coset expansions of ``F(J_1, J_3, ...) P^eps_n`` for homogeneous F."""
    F = parse(F_text)
    deg = F.degree
    lhs = eval_symfunc_at_odd_jm(F, n, limit=n) * hyperoctahedral_sum(n, signed=True)
    half = Fraction(1, 2)
    spectral = GroupAlgebraElement.zero(2 * n)
    double_factorial = prod(range(1, 2 * n, 2))
    for lam in partitions(n):
        f = dimension_f(Partition(p for p in lam for _ in range(2)))
        weight = Fraction(f, double_factorial) * F(content_alphabet(lam, half))
        spectral = spectral + twisted_spherical_element(lam).scale(weight)
    problems = []
    if lhs != spectral:
        problems.append("spectral")
    via2 = GroupAlgebraElement.zero(2 * n)
    via_half = GroupAlgebraElement.zero(2 * n)
    for lam in partitions(n):
        mu = Partition(p - 1 for p in lam)
        psi = coset_sum(mu, n, signed=True)
        via2 = via2 + psi.scale((-1) ** deg * average(F, mu, 2, n))
        via_half = via_half + psi.scale((-1) ** mu.size * 2 ** (deg - mu.size) * average(F, mu, half, n))
    if lhs != via2:
        problems.append("alpha=2 averages")
    if lhs != via_half:
        problems.append("alpha=1/2 averages")
    return _check(f"twisted expansion of {F_text}, n={n}", not problems, ", ".join(problems))


def check_twisted_eigenvalues(n: int, F_text: str) -> Check:
    F = parse(F_text)
    w = eval_symfunc_at_odd_jm(F, n, limit=n)
    bad = []
    for lam in partitions(n):
        pi = twisted_spherical_element(lam)
        value = F(content_alphabet(lam, Fraction(1, 2)))
        if w * pi != pi.scale(value) or pi * w != pi.scale(value):
            bad.append(str(lam))
    return _check(f"twisted eigenvalues of {F_text}, n={n}", not bad, f"failing: {bad}" if bad else "")


# --- coset coefficients in top degree --------------------------------------------

def check_top_degree(n: int, max_k: int = 4, limit: int | None = None) -> list[Check]:
    """For ``|lam| = |mu|``: double-coset and class coefficients agree with each other,
    with the alpha = 1 and alpha = 2 averages and with the refined Catalan sum."""
    limit = n if limit is None else limit
    out = []
    for k in range(max_k + 1):
        sums: dict[Partition, object] = {}
        for lam in partitions(k):
            F = SymFunc.m(*lam)
            M = m_coefficients_fast(eval_symfunc_at_odd_jm(F, n, limit=limit))
            L = class_expansion(eval_symfunc_at_jm(F, range(1, n + 1), n))
            for mu in partitions(k):
                if mu.size + mu.length > n:
                    continue
                values = {
                    "M": Fraction(M.get(mu, 0)),
                    "L": Fraction(L.get(mu, 0)),
                    "A1": average(F, mu, 1, n),
                    "A2": average(F, mu, 2, n),
                    "RC": Fraction(refined_catalan_sum(lam, mu)),
                }
                sums[mu] = sums.get(mu, 0) + values["M"]
                ok = len(set(values.values())) == 1
                detail = " ".join(f"{key}={v}" for key, v in values.items())
                out.append(_check(f"M=L for lam={lam}, mu={mu}, n={n}", ok, detail))
        for mu, total in sums.items():
            expected = catalan_product(mu)
            out.append(_check(f"sum_lam M on mu={mu}, n={n}", total == expected, f"{total} vs {expected}"))
    return out


# --- Jack functions --------------------------------------------------------------

def check_orthogonality(n: int, alpha) -> Check:
    alpha = Fraction(alpha)
    table = jack_table(n, alpha)
    parts = partitions(n)
    for rho in parts:
        for pi in parts:
            s = sum((table[lam, rho] * table[lam, pi] * jack_plancherel(lam, alpha) for lam in parts), Fraction(0))
            expected = alpha ** (n - len(rho)) * Fraction(factorial(n), z_value(rho)) if rho == pi else 0
            if s != expected:
                return _check(f"orthogonality n={n} alpha={alpha}", False, f"rho={rho} pi={pi}: {s}")
    return _check(f"orthogonality n={n} alpha={alpha}", True)


def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def check_specialization(n: int, alpha) -> Check:
    """``sum_rho theta^lam_rho X^l(rho) = prod (X + alpha(j-1) - (i-1))``."""
    alpha = Fraction(alpha)
    for lam in partitions(n):
        lhs = [Fraction(0)] * (n + 1)
        for rho in partitions(n):
            lhs[len(rho)] += theta(lam, rho, alpha)
        rhs = [Fraction(1)]
        for i, row in enumerate(lam):
            for j in range(row):
                rhs = _poly_mul(rhs, [alpha * j - i, Fraction(1)])
        if lhs != rhs:
            return _check(f"specialization n={n} alpha={alpha}", False, f"lam={lam}")
    return _check(f"specialization n={n} alpha={alpha}", True)


def check_elementary_contents(n: int, alpha) -> Check:
    """``e_k(A_lam) = alpha^-k sum_{nu |- k} theta^lam_{nu + 1^(n-k)}``."""
    alpha = Fraction(alpha)
    for lam in partitions(n):
        A = content_alphabet(lam, alpha)
        for k in range(n + 1):
            lhs = SymFunc.e(k)(A)
            rhs = alpha ** -k * sum((theta_hat(lam, nu, alpha) for nu in partitions(k)), Fraction(0))
            if lhs != rhs:
                return _check(f"e_k of contents n={n} alpha={alpha}", False, f"lam={lam} k={k}")
    return _check(f"e_k of contents n={n} alpha={alpha}", True)


def check_theta_duality(n: int, alpha) -> Check:
    alpha = Fraction(alpha)
    for lam in partitions(n):
        for lam_rho in partitions(n):
            mu = Partition(p - 1 for p in lam_rho)
            lhs = theta_hat(lam, mu, alpha)
            rhs = (-alpha) ** mu.size * theta_hat(lam.conjugate(), mu, 1 / alpha)
            if lhs != rhs:
                return _check(f"theta duality n={n} alpha={alpha}", False, f"lam={lam} mu={mu}")
    return _check(f"theta duality n={n} alpha={alpha}", True)


def check_measure(n: int, alpha) -> Check:
    alpha = Fraction(alpha)
    total = sum((jack_plancherel(lam, alpha) for lam in partitions(n)), Fraction(0))
    dual = all(
        jack_plancherel(lam, alpha) == jack_plancherel(lam.conjugate(), 1 / alpha) for lam in partitions(n)
    )
    return _check(f"measure n={n} alpha={alpha}", total == 1 and dual, f"total={total}")


def check_measure_examples(alpha) -> Check:
    a = Fraction(alpha)
    ok = (
        jack_plancherel((3,), a) == 1 / ((1 + a) * (1 + 2 * a))
        and jack_plancherel((2, 1), a) == 6 * a / ((2 + a) * (1 + 2 * a))
        and jack_plancherel((2,), a) == 1 / (1 + a)
    )
    return _check(f"measure values for n<=3 alpha={a}", ok)


# --- shifted symmetric functions -------------------------------------------------

def check_stirling(max_k: int, max_n: int, alpha) -> Check:
    alpha = Fraction(alpha)
    for n in range(max_n + 1):
        for lam in partitions(n):
            A = content_alphabet(lam, alpha)
            for k in range(1, max_k + 1):
                lhs = sum((a ** k for a in A), Fraction(0))
                rhs = sum(
                    (stirling2(k, m) * shifted_power_eval(m + 1, lam, alpha) / (m + 1) for m in range(1, k + 1)),
                    Fraction(0),
                )
                if lhs != rhs:
                    return _check(f"p_k of contents via p* alpha={alpha}", False, f"lam={lam} k={k}")
    return _check(f"p_k of contents via p* alpha={alpha}", True, f"k<={max_k}, n<={max_n}")


def _contained(nu: Partition, lam: Partition) -> bool:
    return len(nu) <= len(lam) and all(a <= b for a, b in zip(nu, lam))


def check_shifted_jack(max_size: int, alpha) -> Check:
    """Vanishing outside containment and the value on the diagonal."""
    alpha = Fraction(alpha)
    for m in range(max_size + 1):
        for lam in partitions(m):
            for s in range(m + 1):
                for nu in partitions(s):
                    value = shifted_jack_eval(nu, lam, alpha)
                    if not _contained(nu, lam) and value != 0:
                        return _check(f"shifted Jack alpha={alpha}", False, f"J*_{nu}({lam}) = {value}")
            if shifted_jack_eval(lam, lam, alpha) != alpha ** -m * j_alpha(lam, alpha):
                return _check(f"shifted Jack alpha={alpha}", False, f"diagonal at {lam}")
    return _check(f"shifted Jack alpha={alpha}", True, f"|lam|<={max_size}")


def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def check_shifted_averages(max_nu: int, max_mu: int, max_n: int, alpha) -> Check:
    """Averages of shifted Jack functions against theta (binomial form), and their plain sum."""
    alpha = Fraction(alpha)
    for n in range(max_n + 1):
        measure = {lam: jack_plancherel(lam, alpha) for lam in partitions(n)}
        for s in range(max_nu + 1):
            for nu in partitions(s):
                values = {lam: shifted_jack_eval(nu, lam, alpha) for lam in partitions(n)} if n >= s else {}
                plain = sum((values[lam] * measure[lam] for lam in values), Fraction(0))
                if plain != falling_factorial(n, s):
                    return _check(f"shifted Jack averages alpha={alpha}", False, f"plain sum nu={nu} n={n}")
                for t in range(max_mu + 1):
                    for mu in partitions(t):
                        n0 = mu.size + mu.length
                        if n < n0:
                            lhs = Fraction(0)
                        else:
                            zz = Fraction(z_value(unreduce(mu, n)), factorial(n))
                            lhs = zz * sum(
                                (values[lam] * measure[lam] * theta_hat(lam, mu, alpha) for lam in values),
                                Fraction(0),
                            )
                        if s >= n0:
                            rhs = _binom(n - n0, s - n0) * z_value(unreduce(mu, s)) * theta_hat(nu, mu, alpha)
                        else:
                            rhs = 0
                        if lhs != rhs:
                            return _check(
                                f"shifted Jack averages alpha={alpha}", False, f"nu={nu} mu={mu} n={n}: {lhs} vs {rhs}"
                            )
    return _check(f"shifted Jack averages alpha={alpha}", True, f"|nu|<={max_nu}, |mu|<={max_mu}, n<={max_n}")


# --- reference tables ------------------------------------------------------------

def formula_poly(terms: list, alpha) -> PolyN:
    """Collapse ``[[alpha power, n power, coefficient], ...]`` to a polynomial in n."""
    alpha = Fraction(alpha)
    coeffs: dict[int, Fraction] = {}
    for a_pow, n_pow, c in terms:
        coeffs[n_pow] = coeffs.get(n_pow, Fraction(0)) + Fraction(c) * alpha ** a_pow
    top = max(coeffs, default=-1)
    return PolyN(coeffs.get(k, 0) for k in range(top + 1))


def check_average_table(alphas: Iterable = ALPHAS, points: int = 6) -> list[Check]:
    out = []
    table = golden()["averages"]
    all_mu = [mu for s in range(4) for mu in partitions(s)]
    for row in table:
        F = parse(row["F"])
        expected = {parse_partition(k): v for k, v in row["coefficients"].items()}
        for alpha in alphas:
            alpha = Fraction(alpha)
            bad = []
            for mu in all_mu:
                want = formula_poly(expected.get(mu, []), alpha)
                got = average_poly(F, mu, alpha)
                n0 = mu.size + mu.length
                sampled = all(average(F, mu, alpha, n) == want(n) for n in range(n0, n0 + points))
                if got != want or not sampled:
                    bad.append(f"{mu}: {got} vs {want}")
            out.append(_check(f"averages of {row['F']} at alpha={alpha}", not bad, "; ".join(bad)))
    return out


def check_weingarten_table(max_n: int = 6, min_order: int = 6) -> list[Check]:
    out = []
    data = golden()
    for row in data["weingarten"]:
        n, mu, printed = row["n"], parse_partition(row["mu"]), row["signed"]
        if n > max_n:
            continue
        from .weingarten import SeriesMismatchError, wg_series

        order = max(len(printed) - 1, min_order)
        try:
            series = wg_series(n, mu, order, check=True)
        except SeriesMismatchError as exc:
            out.append(_check(f"Wg({mu};{n})", False, str(exc)))
            continue
        got = [int(c) for c in series.signed()[: len(printed)]]
        out.append(_check(f"Wg({mu};{n})", got == printed, " ".join(map(str, got))))
    for row in data["weingarten_general_n"]:
        mu = parse_partition(row["mu"])
        polys = [PolyN(c) for c in row["signed"]]
        from .weingarten import wg_series

        bad = []
        for n in range(mu.size + mu.length, max_n + 1):
            if n == 0:
                continue
            got = wg_series(n, mu, len(polys) - 1, check=False).signed()
            if got != [p(n) for p in polys]:
                bad.append(n)
        out.append(_check(f"Wg({mu};n) leading terms", not bad, f"failing n: {bad}" if bad else f"n<={max_n}"))
    return out


# --- suites ----------------------------------------------------------------------

def suite_elementary(**_) -> list[Check]:
    checks = [check_elementary(n) for n in (2, 3, 4)]
    checks += [check_elementary(n, signed=True) for n in (2, 3)]
    for alpha in ALPHAS:
        ok = all(
            average_poly(SymFunc.e(k), mu, alpha) == PolyN([1 if mu.size == k else 0])
            for k in range(5)
            for s in range(5)
            for mu in partitions(s)
        )
        checks.append(_check(f"averages of e_k at alpha={alpha}", ok))
    return checks


def suite_spherical(**_) -> list[Check]:
    checks = [check_eigenvalues(n, F) for n in (2, 3) for F in EIGEN_FUNCTIONS]
    checks += [check_twisted_eigenvalues(n, F) for n in (2, 3) for F in EIGEN_FUNCTIONS]
    checks += [check_twisted_spectral(n, F) for n in (2, 3) for F in EIGEN_FUNCTIONS + ("e[2]",)]
    return checks


def suite_coset(limit: int | None = None, **_) -> list[Check]:
    checks = check_top_degree(4, limit=4)
    checks += check_top_degree(5, limit=5 if limit is None else limit)
    return checks


def suite_jack(**_) -> list[Check]:
    checks = []
    for alpha in ALPHAS:
        for n in range(1, 6):
            checks += [
                check_orthogonality(n, alpha),
                check_specialization(n, alpha),
                check_elementary_contents(n, alpha),
                check_theta_duality(n, alpha),
                check_measure(n, alpha),
            ]
        checks.append(check_measure(6, alpha))
        checks.append(check_measure_examples(alpha))
    return checks


def suite_shifted(**_) -> list[Check]:
    checks = []
    for alpha in ALPHAS:
        checks.append(check_stirling(4, 6, alpha))
        checks.append(check_shifted_jack(4, alpha))
    for alpha in (Fraction(1, 2), Fraction(1), Fraction(2)):
        checks.append(check_shifted_averages(4, 2, 7, alpha))
    return checks


def suite_averages_table(**_) -> list[Check]:
    return check_average_table()


def suite_weingarten_table(**_) -> list[Check]:
    return check_weingarten_table()


def suite_conjectures(max_k: int = 4, **_) -> list[Check]:
    checks = []
    for k in range(max_k + 1):
        obs = conj.area_of_catalan_paths(k)
        checks.append(_check(obs.label, obs.holds, obs.detail))
    for n in (2, 3, 4):
        obs = conj.hecke_generation_rank(n, limit=4)
        checks.append(_check(obs.label, obs.holds, obs.detail))
    for k in range(min(max_k, 4) + 1):
        obs = conj.alpha_independence(k)
        checks.append(_check(f"alpha- and n-independence, degree {k}", all(o.holds for o in obs), f"{len(obs)} pairs"))
    for k in range(1, min(max_k, 4) + 1):
        funcs = [SymFunc.h(k)] + [SymFunc.m(*lam) for lam in partitions(k)]
        obs = [o for F in funcs for o in conj.n_independence(F)]
        checks.append(_check(f"n-independence one step below top, degree {k}", all(o.holds for o in obs), f"{len(obs)} cases"))
    for key, value in golden()["second_order"].items():
        mu = parse_partition(key)
        if mu.size + 1 > max_k + 1:
            continue
        got = conj.second_order_coefficient(mu)
        checks.append(_check(f"G^{mu.size + 1}_({mu})", got == value, f"{got}"))
    return checks


# (i, j, N): ten monomials of degree at most 6 in the entries of a matrix in O(4) or O(6)
MC_BATTERY = (
    ((1, 1), (1, 1), 4),
    ((1, 1, 2, 2), (1, 1, 2, 2), 4),
    ((1, 1, 1, 1), (1, 1, 2, 2), 4),
    ((1, 1, 1, 1), (1, 1, 1, 1), 4),
    ((1, 2, 1, 2), (1, 2, 2, 1), 4),
    ((1, 1), (2, 2), 6),
    ((1, 1, 1, 1, 1, 1), (1, 1, 1, 1, 1, 1), 6),
    ((1, 1, 2, 2, 3, 3), (1, 1, 2, 2, 3, 3), 6),
    ((1, 1, 2, 2, 3, 3), (1, 2, 1, 2, 3, 3), 6),
    ((1, 1, 2, 2), (1, 1, 1, 1), 6),
)


def suite_montecarlo(samples: int = 100_000, seed: int = 20240601, **_) -> list[Check]:
    from .haar_mc import mc_moment
    from .weingarten import integrate_monomial

    checks = []
    for idx, (i, j, N) in enumerate(MC_BATTERY):
        exact = integrate_monomial(i, j, N)
        mean, err = mc_moment(i, j, N, samples, seed + idx)
        z = (mean - float(exact)) / err if err else 0.0
        checks.append(_check(f"MC {i} {j} N={N}", abs(z) <= 4, f"mean={mean:.6g} exact={exact} z={z:.2f}"))
    hits = sum(c.passed for c in checks)
    checks.append(_check("MC battery (at least 9 of 10 within 4 stderr)", hits >= 9, f"{hits}/10"))
    return checks


SUITES: dict[str, Callable[..., list[Check]]] = {
    "elementary": suite_elementary,
    "spherical": suite_spherical,
    "coset": suite_coset,
    "jack": suite_jack,
    "shifted": suite_shifted,
    "averages-table": suite_averages_table,
    "weingarten-table": suite_weingarten_table,
    "conjectures": suite_conjectures,
    "montecarlo": suite_montecarlo,
}

ALIASES = {
    "props-3": ("elementary",),
    "props-4": ("spherical",),
    "props-5": ("coset",),
    "props-8": ("jack", "shifted"),
    "tables-9-1": ("averages-table",),
    "tables-9-2": ("weingarten-table",),
    "all": tuple(SUITES),
}


def resolve_suite(name: str) -> tuple[str, ...]:
    if name in SUITES:
        return (name,)
    if name in ALIASES:
        return ALIASES[name]
    raise KeyError(name)


def run_suite(name: str, **options) -> list[Check]:
    out = []
    for suite in resolve_suite(name):
        out += SUITES[suite](**options)
    return out
