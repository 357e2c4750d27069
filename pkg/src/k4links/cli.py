"""Command line: coefficient tables, asymptotic constants and verification runs.

Exit status is 0 on success, 1 when a verification or computation fails and
2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import mpmath as mp

from . import asymptotics as asy
from .links import build_E, build_K, build_Kbar, build_L, build_Lbar, build_Lhat
from .maps import build_Tr, solve
from .verify import SCOPES, run_scope

SERIES_FAMILIES = ("K", "Lbar", "Lhat", "L", "Mplus", "M1plus", "M2plus", "E", "Kbar", "T1", "T3")
CONSTANT_FAMILIES = ("Lbar", "Lhat", "L", "Knots", "M", "M1", "M2", "unrootedM", "unrootedM1", "unrootedM2")
MAP_FAMILY = {"M": "all", "M1": "minimal", "M2": "unknot"}


def build_series(family: str, order: int):
    builders = {
        "K": build_K,
        "Lbar": build_Lbar,
        "Lhat": build_Lhat,
        "L": build_L,
        "E": build_E,
        "Kbar": build_Kbar,
        "T1": lambda n: build_Tr(1, n),
        "T3": lambda n: build_Tr(3, n),
        "Mplus": lambda n: solve("all", n).plus_series,
        "M1plus": lambda n: solve("minimal", n).plus_series,
        "M2plus": lambda n: solve("unknot", n).plus_series,
    }
    if order == 0 and family in ("Mplus", "M1plus", "M2plus"):
        return [0]
    return list(builders[family](order).coeffs)


def format_series(family: str, order: int, coeffs: list, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"family": family, "order": order, "coefficients": [str(c) for c in coeffs]})
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "coefficient"])
        for n, c in enumerate(coeffs):
            w.writerow([n, str(c)])
        return buf.getvalue().rstrip("\n")
    terms = []
    for n, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if n == 0 else ("z" if n == 1 else f"z^{n}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c} {mono}")
    return " + ".join(terms) if terms else "0"


def cmd_series(args) -> int:
    coeffs = build_series(args.family, args.order)
    print(format_series(args.family, args.order, coeffs, args.format))
    return 0


def _fmt(x, digits):
    return mp.nstr(x, digits, strip_zeros=False)


def constants_report(family: str, digits: int, precision: int = asy.DEFAULT_DIGITS) -> dict:
    """Structured constants for one family; reals as decimal strings."""
    if digits > precision - 10:
        raise ValueError(f"digits must be at most {precision - 10} at precision {precision}")
    out = {"family": family, "kind": "constants", "precision": precision, "digits": digits}
    with mp.workdps(precision):
        if family in ("Lbar", "Lhat", "L"):
            res = asy.links_singularity(precision)
            g32 = asy.gamma_minus_three_halves()
            d = getattr(res, family)
            if family == "L":
                pc = d.growth_description.parity_constants
                out.update({
                    "rho": _fmt(d.rho ** 2, digits),
                    "base": _fmt(d.growth_description.base, digits),
                    "exponent": "-5/2",
                    "constant_even": _fmt(pc["even"], digits),
                    "constant_odd": _fmt(pc["odd"], digits),
                    "form": "[z^n] ~ c/Gamma(-3/2) n^(-5/2) sqrt(rho)^(-n), c by parity of n",
                })
            else:
                out.update({
                    "rho": _fmt(d.rho, digits),
                    "exponent": "-5/2",
                    "constant": _fmt(d.transfer_constant, digits),
                    "C": _fmt(d.transfer_constant / g32, digits),
                    "form": "[z^n] ~ c/Gamma(-3/2) n^(-5/2) rho^(-n)",
                })
        elif family == "Knots":
            k = asy.knot_asymptotics(500, checkpoints=[500], digits=precision)
            out.update({
                "c": _fmt(k.c, digits),
                "alpha": "-7/4",
                "beta": _fmt(k.beta, digits),
                "form": "[z^n] ~ c n^alpha exp(beta sqrt(n))",
            })
        else:
            unrooted = family.startswith("unrooted")
            fam = MAP_FAMILY[family.replace("unrooted", "")]
            d = asy.unrooted_constants(fam, precision) if unrooted else asy.map_singularity(fam, precision)
            g12 = asy.gamma_minus_half()
            factor = " 2^(n/2)" if fam == "all" else ""
            prefix = "1/(2n) " if unrooted else ""
            out.update({
                "rho": _fmt(d.rho, digits),
                "y_at_rho": _fmt(d.y_at_rho, digits),
                "exponent": "-5/2" if unrooted else "-3/2",
                "constant": _fmt(d.transfer_constant, digits),
                "C": _fmt(d.transfer_constant / g12, digits),
                "parity": "even n only",
                "form": f"[z^n] ~ {prefix}c/Gamma(-1/2) n^(-3/2){factor} rho^(-n)",
            })
            if unrooted:
                out["prefactor"] = "1/(2n)"
    return out


def cmd_constants(args) -> int:
    try:
        report = constants_report(args.family, args.digits, args.precision)
    except asy.SingularityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(report))
    else:
        for key, val in report.items():
            print(f"{key}: {val}")
    return 0


def cmd_verify(args) -> int:
    reports = run_scope(args.scope, max_vertices=args.max_vertices, order=args.order, max_size=args.max_size)
    ok = True
    for rep in reports:
        for c in rep.checks:
            print(f"[{'PASS' if c.ok else 'FAIL'}] {rep.scope}: {c.name}  {c.detail}")
        ok &= rep.ok
    print("pass" if ok else "fail")
    return 0 if ok else 1


def _nonnegative(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="k4links", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="coefficients of a generating function")
    p.add_argument("family", choices=SERIES_FAMILIES)
    p.add_argument("--order", type=_nonnegative, default=20)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("constants", help="asymptotic constants of a family")
    p.add_argument("family", choices=CONSTANT_FAMILIES)
    p.add_argument("--digits", type=int, default=10)
    p.add_argument("--precision", type=int, default=asy.DEFAULT_DIGITS)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("scope", choices=SCOPES + ("all",))
    p.add_argument("--max-vertices", type=int, default=4)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--max-size", type=int, default=12)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "constants" and args.digits > args.precision - 10:
        parser.error(f"--digits must be at most --precision - 10 ({args.precision - 10})")
    if args.command == "verify" and args.max_vertices not in range(1, 7):
        parser.error("--max-vertices must be between 1 and 6")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
