"""Command-line interface: ``python -m oddjm`` or the ``oddjm`` script.

Exit status is 0 on success, 1 when a ``verify`` suite has failures and 2 on
usage errors (bad flags, malformed partitions, out-of-range sizes).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .partition import Partition, parse_partition, partitions

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _alpha(text: str) -> Fraction:
    value = _rational(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("alpha must be positive")
    return value


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _indices(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None


def _symfunc(text: str):
    from .symfunc import SymFuncSyntaxError, parse

    try:
        return parse(text)
    except SymFuncSyntaxError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(args, rows: list[tuple], payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for row in rows:
            print("\t".join(str(x) for x in row))


# --- subcommands -----------------------------------------------------------------

def cmd_expand(args) -> int:
    from .group_algebra import (
        class_expansion,
        coset_expansion,
        eval_symfunc_at_jm,
        eval_symfunc_at_odd_jm,
        hyperoctahedral_sum,
        m_coefficients_fast,
        _check_limit,
    )

    n = args.n
    if n < 1:
        raise UsageError("--n must be positive")
    if args.kind == "class":
        _check_limit(n, None)
        coeffs = class_expansion(eval_symfunc_at_jm(args.F, range(1, n + 1), n))
    else:
        w = eval_symfunc_at_odd_jm(args.F, n)
        if args.fast:
            coeffs = m_coefficients_fast(w)
        else:
            coeffs = coset_expansion(w * hyperoctahedral_sum(n))
    items = sorted(coeffs.items())
    _emit(
        args,
        [(mu, Fraction(c)) for mu, c in items],
        {"F": str(args.F), "n": n, "kind": args.kind, "coefficients": {str(mu): str(Fraction(c)) for mu, c in items}},
    )
    return EXIT_OK


def cmd_avg(args) -> int:
    from .averages import average, average_poly

    base = {"F": str(args.F), "mu": str(args.mu), "alpha": str(args.alpha)}
    if args.poly:
        poly = average_poly(args.F, args.mu, args.alpha)
        _emit(args, [(poly,)], {**base, "poly": str(poly), "coefficients": [str(c) for c in poly.coefficients]})
    else:
        if args.n is None:
            raise UsageError("give --n or --poly")
        value = average(args.F, args.mu, args.alpha, args.n)
        _emit(args, [(value,)], {**base, "n": args.n, "value": str(value)})
    return EXIT_OK


def cmd_jack(args) -> int:
    from .jack import jack_plancherel, jack_table

    n = args.n
    if n < 0:
        raise UsageError("--n must be nonnegative")
    if args.measure:
        rows = [(lam, jack_plancherel(lam, args.alpha)) for lam in partitions(n)]
        _emit(args, rows, {"n": n, "alpha": str(args.alpha), "measure": {str(l): str(p) for l, p in rows}})
        return EXIT_OK
    table = jack_table(n, args.alpha)
    parts = partitions(n)
    if args.format == "json":
        payload = {
            "n": n,
            "alpha": str(args.alpha),
            "theta": {str(l): {str(r): str(table[l, r]) for r in parts} for l in parts},
        }
        _emit(args, [], payload)
    else:
        print(table.tsv())
    return EXIT_OK


def cmd_wg(args) -> int:
    from . import weingarten as wg

    if args.wg_command == "exact":
        elem = wg.wg_exact(args.n, args.N)
        rows = elem.items()
        _emit(args, rows, {"n": args.n, "N": args.N, "values": {str(mu): str(v) for mu, v in rows}})
    elif args.wg_command == "series":
        series = wg.wg_series(args.n, args.coset, args.order, check=not args.no_check)
        powers = [series.leading_power() - k for k in range(len(series.coefficients))]
        signed = series.signed()
        _emit(
            args,
            [(f"N^{p}", c) for p, c in zip(powers, signed)],
            {
                "n": args.n,
                "coset": str(series.mu),
                "powers": powers,
                "coefficients": [str(c) for c in signed],
            },
        )
    elif args.wg_command == "integrate":
        if len(args.i) != len(args.j):
            raise UsageError("--i and --j must have the same length")
        if len(args.i) % 2:
            print("note: odd-degree monomials integrate to 0 by the symmetry g -> -g", file=sys.stderr)
            value = Fraction(0)
        else:
            value = wg.integrate_monomial(args.i, args.j, args.N)
        _emit(args, [(value,)], {"i": list(args.i), "j": list(args.j), "N": args.N, "value": str(value)})
    elif args.wg_command == "mc":
        from .haar_mc import mc_moment

        if len(args.i) != len(args.j):
            raise UsageError("--i and --j must have the same length")
        if len(args.i) % 2:
            exact = Fraction(0)
            print("note: odd-degree monomials integrate to 0 by the symmetry g -> -g", file=sys.stderr)
            mean, err = 0.0, 0.0
        else:
            exact = wg.integrate_monomial(args.i, args.j, args.N)
            mean, err = mc_moment(args.i, args.j, args.N, args.samples, args.seed)
        z = (mean - float(exact)) / err if err else 0.0
        rows = [("mean", f"{mean:.10g}"), ("stderr", f"{err:.10g}"), ("exact", exact), ("z", f"{z:.4f}")]
        _emit(
            args,
            rows,
            {"mean": mean, "stderr": err, "exact": str(exact), "z": z, "samples": args.samples, "seed": args.seed},
        )
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import ALIASES, SUITES, resolve_suite, run_suite

    try:
        names = resolve_suite(args.suite)
    except KeyError:
        known = ", ".join(list(SUITES) + list(ALIASES))
        raise UsageError(f"unknown suite {args.suite!r}; choose from {known}") from None
    options = {"max_k": args.max_k, "samples": args.samples, "seed": args.seed}
    rows, payload = [], []
    failed = 0
    for name in names:
        for check in run_suite(name, **options):
            status = "PASS" if check.passed else "FAIL"
            failed += not check.passed
            rows.append((name, status, check.name, check.detail))
            payload.append({"suite": name, "status": status, "check": check.name, "detail": check.detail})
    _emit(args, rows, {"checks": payload, "failed": failed})
    return EXIT_FAIL if failed else EXIT_OK


# --- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--format", choices=("tsv", "json"), default="tsv", help="output format (default tsv)")

    parser = argparse.ArgumentParser(
        prog="oddjm",
        description="Exact computations with odd Jucys-Murphy elements, Jack averages and orthogonal Weingarten functions.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser(
        "expand",
        parents=[common],
        allow_abbrev=False,
        help="brute-force expansion of F at Jucys-Murphy elements",
        description="Expand F(J_1, J_3, ..., J_2n-1) P_n in double-coset sums (default) or "
        "F(J_1, ..., J_n) in class sums, by explicit computation in the group algebra.",
    )
    p.add_argument("--F", type=_symfunc, required=True, help='symmetric function, e.g. "h[3]" or "m[2,1] - 2*p[3]"')
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("coset", "class"), default="coset")
    p.add_argument("--fast", action="store_true", help="read coset coefficients off F(J) without multiplying by P_n")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser(
        "avg",
        parents=[common],
        allow_abbrev=False,
        help="Jack-Plancherel average of F on a reduced type",
        description="Exact average A_mu(F, n); with --poly the polynomial in n.",
    )
    p.add_argument("--F", type=_symfunc, required=True)
    p.add_argument("--mu", type=_partition, default=Partition(), help='reduced type, e.g. "2,1" (default "(0)")')
    p.add_argument("--alpha", type=_alpha, default=Fraction(2))
    group = p.add_mutually_exclusive_group()
    group.add_argument("--n", type=int)
    group.add_argument("--poly", action="store_true")
    p.set_defaults(func=cmd_avg)

    p = sub.add_parser(
        "jack",
        parents=[common],
        allow_abbrev=False,
        help="power-sum coefficients of Jack functions, or the Jack-Plancherel measure",
        description="Print theta^lam_rho(alpha) for all lam, rho of size n (rows lam, columns rho).",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=_alpha, default=Fraction(1))
    p.add_argument("--measure", action="store_true", help="print the Jack-Plancherel measure instead")
    p.set_defaults(func=cmd_jack)

    p = sub.add_parser(
        "wg",
        allow_abbrev=False,
        help="orthogonal Weingarten function and Haar integrals",
        description="Exact values, 1/N expansions, moment integrals and Monte Carlo checks.",
    )
    wsub = p.add_subparsers(dest="wg_command", required=True, metavar="WHAT")
    q = wsub.add_parser("exact", parents=[common], allow_abbrev=False, help="Wg per reduced coset type")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--N", type=int, required=True)
    q = wsub.add_parser("series", parents=[common], allow_abbrev=False, help="large-N expansion")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--coset", type=_partition, default=Partition(), help="reduced coset type")
    q.add_argument("--order", type=int, default=6)
    q.add_argument("--no-check", action="store_true", help="skip the cross-check against the exact value")
    for name, helptext in (("integrate", "exact Haar integral of a monomial"), ("mc", "Monte Carlo estimate of a monomial")):
        q = wsub.add_parser(name, parents=[common], allow_abbrev=False, help=helptext)
        q.add_argument("--i", type=_indices, required=True, help="row indices, e.g. 1,1,2,2")
        q.add_argument("--j", type=_indices, required=True, help="column indices")
        q.add_argument("--N", type=int, required=True)
        if name == "mc":
            q.add_argument("--samples", type=int, default=100_000)
            q.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_wg)

    p = sub.add_parser(
        "verify",
        parents=[common],
        allow_abbrev=False,
        help="run a verification suite",
        description="Suites: elementary, spherical, coset, jack, shifted, averages-table, weingarten-table, "
        "conjectures, montecarlo, or all.  Also accepted: props-3, props-4, props-5, props-8, "
        "tables-9-1, tables-9-2.",
    )
    p.add_argument("suite")
    p.add_argument("--max-k", type=int, default=4, help="largest k for the conjecture checks")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=20240601)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"oddjm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError) as exc:
        print(f"oddjm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


run = main


if __name__ == "__main__":
    sys.exit(main())
