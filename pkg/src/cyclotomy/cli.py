"""Command-line front end.

Exit codes: 0 success or affirmative verdict, 1 negative verdict or failed
verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import polyring
from .cyclotomic import identify_cyclotomic, phi
from .numtheory import primality_mode
from .polyring import PolySyntaxError, compose_power, format_poly, parse_poly
from .primesearch import eval_composition, is_probable_prime, search_a
from .structure import (expand_product, factor_composition, is_irreducible_composition)
from .verify import run_suites

U64_MAX = (1 << 64) - 1


def _int_arg(minimum: int):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if v > U64_MAX:
            raise argparse.ArgumentTypeError(f"{text} overflows the 64-bit input limit")
        if v < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {v}")
        return v
    parse.__name__ = "integer"
    return parse


positive = _int_arg(1)


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def cmd_phi(args) -> int:
    p = phi(args.n)
    _emit(_dump(polyring.to_json(p)) if args.json else format_poly(p))
    return 0


def cmd_factor(args) -> int:
    f = factor_composition(args.k, args.n)
    if not args.expand:
        _emit(_dump(f.to_json()) if args.json else f.to_text())
        return 0
    target = compose_power(phi(args.k), args.n)
    expanded = expand_product(f)
    verified = expanded == target
    if args.json:
        _emit(_dump({
            "factors": f.to_json(),
            "polynomials": {str(i): polyring.to_json(phi(i)) for i in f.indices},
            "product": polyring.to_json(expanded),
            "verified": verified,
        }))
    else:
        _emit(f.to_text())
        for i in f.indices:
            _emit(f"Phi_{i} = {format_poly(phi(i))}")
        _emit(f"product = {format_poly(expanded)}")
        _emit(f"verified: {'yes' if verified else 'NO'}")
    return 0 if verified else 1


def cmd_irred(args) -> int:
    if is_irreducible_composition(args.k, args.n):
        _emit("irreducible")
        return 0
    _emit(f"reducible: {len(factor_composition(args.k, args.n))} factors")
    return 1


def cmd_identify(args) -> int:
    try:
        p = parse_poly(args.polynomial)
    except PolySyntaxError as exc:
        sys.stderr.write(f"cyclotomy identify: error: {exc}\n")
        return 2
    n = identify_cyclotomic(p)
    if n is None:
        _emit("not cyclotomic")
        return 1
    _emit(f"Phi_{n}")
    return 0


def cmd_eval(args) -> int:
    v = eval_composition(args.k, args.a, args.n)
    _emit(str(v))
    if not args.prime_check:
        return 0
    if is_probable_prime(v):
        _emit(f"prime ({primality_mode(v)})")
        return 0
    _emit("composite")
    return 1


def cmd_search(args) -> int:
    report = search_a(args.k, args.n, args.a_max, jobs=args.jobs)
    _emit(_dump(report.to_json()) if args.json else report.to_text())
    return 0


def cmd_verify(args) -> int:
    results = run_suites(args.max_n, args.max_kn)
    for r in results:
        _emit(r.line())
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclotomy",
        description="Cyclotomic polynomials, factorization of Phi_k(x^n), prime searches.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", help="print the n-th cyclotomic polynomial")
    p.add_argument("n", type=positive)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("factor", help="cyclotomic factorization of Phi_k(x^n)")
    p.add_argument("k", type=positive)
    p.add_argument("n", type=positive)
    p.add_argument("--expand", action="store_true", help="expand and verify the product")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("irred", help="is Phi_k(x^n) irreducible? (exit 0 yes, 1 no)")
    p.add_argument("k", type=positive)
    p.add_argument("n", type=positive)
    p.set_defaults(func=cmd_irred)

    p = sub.add_parser("identify", help="find n with Phi_n equal to a polynomial")
    p.add_argument("polynomial")
    p.set_defaults(func=cmd_identify)

    p = sub.add_parser("eval", help="exact value of Phi_k(a^n)")
    p.add_argument("k", type=positive)
    p.add_argument("a", type=positive)
    p.add_argument("n", type=positive)
    p.add_argument("--prime-check", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("search", help="values a <= a_max with Phi_k(a^n) prime")
    p.add_argument("--k", type=positive, required=True)
    p.add_argument("--n", type=positive, required=True)
    p.add_argument("--a-max", type=positive, required=True)
    p.add_argument("--jobs", type=positive, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run the identity and factorization suites")
    p.add_argument("--max-n", type=positive, default=200)
    p.add_argument("--max-kn", type=positive, default=60)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
