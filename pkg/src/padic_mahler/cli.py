"""Command-line interface.

Subcommands: mahler, padic-mahler, iwasawa, entropy, mp, hbar, homology,
growth, verify-corpus.  Output is aligned text by default or JSON with
--format json.  Exit codes: 0 success, 1 corpus verification failure,
2 usage error (argparse), 3 parse error, 4 domain/precondition error,
5 precision error, 6 convergence error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .corpus import branched_cover_homology_order, load_corpus, verify_corpus
from .entropy import entropy_total
from .errors import (
    ConvergenceError,
    DomainError,
    ParseError,
    PrecisionError,
)
from .iwasawa import fit_invariants, lambda_invariant, mu_invariant
from .mahler import mahler_euclidean, mahler_padic, resultant_limit_estimate
from .ntheory import INFINITY
from .parsing import parse_laurent, parse_polynomial
from .polynomials import MultivariatePolynomial, substitute_onevar
from .pure import pure_entropy, pure_log_mahler_closed_form, \
    pure_log_mahler_estimate, pure_link_growth

EXIT_PARSE = 3
EXIT_DOMAIN = 4
EXIT_PRECISION = 5
EXIT_CONVERGENCE = 6


def _add_poly_options(sub):
    sub.add_argument("--poly", help="one-variable polynomial text")
    sub.add_argument("--delta", help="multivariable polynomial text")
    sub.add_argument("--subs", help="comma-separated exponents for --delta, "
                                    "e.g. '1,-1'")


def _resolve_poly(args):
    if args.poly is not None:
        return parse_laurent(args.poly)
    if args.delta is None:
        raise DomainError("provide --poly, or --delta with --subs")
    delta = parse_polynomial(args.delta)
    if isinstance(delta, MultivariatePolynomial):
        if args.subs is None:
            raise DomainError("--delta needs --subs exponents")
        exps = [int(x) for x in args.subs.split(",")]
        return substitute_onevar(delta, exps)
    return delta


def _place(text):
    if text in ("inf", "infinity", "oo"):
        return INFINITY
    return int(text)


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="padic-mahler",
        description="Exact Mahler measures, cyclic resultants, Iwasawa "
                    "invariants and p-adic entropies of link polynomials")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    subs = ap.add_subparsers(dest="command", required=True)

    s = subs.add_parser("mahler", help="log Mahler measure at a place")
    _add_poly_options(s)
    s.add_argument("--place", default="inf", help="'inf' or a prime")
    s.add_argument("--tol", type=float, default=1e-12)

    s = subs.add_parser("padic-mahler", help="p-adic log Mahler measure")
    _add_poly_options(s)
    s.add_argument("--prime", type=int, required=True)

    s = subs.add_parser("iwasawa", help="Iwasawa invariants, both routes")
    _add_poly_options(s)
    s.add_argument("--prime", type=int, required=True)
    s.add_argument("--rmax", type=int, default=6)

    s = subs.add_parser("entropy", help="entropy decomposition over places")
    _add_poly_options(s)
    s.add_argument("--tol", type=float, default=1e-9)

    s = subs.add_parser("mp", help="purely p-adic log Mahler measure")
    _add_poly_options(s)
    s.add_argument("--prime", type=int, required=True)
    s.add_argument("--precision", type=int, default=32)
    s.add_argument("--nbudget", type=int, default=110)

    s = subs.add_parser("hbar", help="purely p-adic entropy")
    _add_poly_options(s)
    s.add_argument("--prime", type=int, required=True)
    s.add_argument("--precision", type=int, default=32)
    s.add_argument("--nbudget", type=int, default=110)
    s.add_argument("--solenoid", action="store_true",
                   help="accept non-monic polynomials (cyclic-module counts)")

    s = subs.add_parser("homology", help="branched cover homology order")
    _add_poly_options(s)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--components", type=int, default=1)

    s = subs.add_parser("growth", help="cyclic resultant growth sequence")
    _add_poly_options(s)
    s.add_argument("--place", default="inf")
    s.add_argument("--nmax", type=int, default=100)
    s.add_argument("--skip-p-multiples", action="store_true")
    s.add_argument("--pure", action="store_true",
                   help="purely p-adic link growth instead")
    s.add_argument("--components", type=int, default=1)
    s.add_argument("--precision", type=int, default=24)

    s = subs.add_parser("verify-corpus", help="run the example corpus")
    s.add_argument("--corpus", help="path to a corpus JSON file")
    s.add_argument("--tol", type=float, default=1e-9)
    return ap


def _run(args) -> int:
    if args.command == "mahler":
        poly = _resolve_poly(args)
        place = _place(args.place)
        if place == INFINITY:
            m = mahler_euclidean(poly, tol=args.tol)
            _emit(args, m.to_dict(),
                  f"log m({poly}) = {m.value:.10f}  (abs error <= {m.error:.2e})")
        else:
            m = mahler_padic(poly, place)
            _emit(args, m.to_dict(),
                  f"log m_{place}({poly}) = {m.coefficient} * log {place} "
                  f"= {m.value:.10f}")
        return 0

    if args.command == "padic-mahler":
        poly = _resolve_poly(args)
        m = mahler_padic(poly, args.prime)
        _emit(args, m.to_dict(),
              f"log m_{args.prime}({poly}) = {m.coefficient} * log "
              f"{args.prime} = {m.value:.10f}")
        return 0

    if args.command == "iwasawa":
        poly = _resolve_poly(args)
        inv = fit_invariants(poly, args.prime, args.rmax)
        lam = lambda_invariant(poly, args.prime)
        mu = mu_invariant(poly, args.prime)
        payload = inv.to_dict()
        payload["analytic"] = {"lambda": lam, "mu": mu}
        _emit(args, payload,
              f"lambda={inv.lam} mu={inv.mu} nu={inv.nu} r0={inv.r0} "
              f"(analytic lambda={lam} mu={mu})")
        return 0

    if args.command == "entropy":
        poly = _resolve_poly(args)
        rep = entropy_total(poly, tol=args.tol)
        finite = ", ".join(f"h_{p} = {c} * log {p}" for p, c in rep.h_p.items())
        _emit(args, rep.to_dict(),
              f"h = {rep.h_total:.10f}; h_inf = {rep.h_inf.value:.10f}"
              + (f"; {finite}" if finite else ""))
        return 0

    if args.command == "mp":
        poly = _resolve_poly(args)
        est = pure_log_mahler_estimate(poly, args.prime, args.nbudget,
                                       args.precision)
        payload = est.to_dict()
        lines = [f"estimator:   {est.value.digit_string()}"]
        try:
            cf = pure_log_mahler_closed_form(poly, args.prime, args.precision)
            agree = est.value.agreement_valuation(cf.value)
            payload["closed_form"] = cf.to_dict()
            payload["agreement_digits"] = (
                None if agree == math.inf else int(agree))
            lines.append(f"closed form: {cf.value.digit_string()} "
                         f"[{cf.method}]")
            lines.append(f"agreement:   {agree} {args.prime}-adic digits")
        except DomainError as exc:
            lines.append(f"closed form unavailable: {exc}")
        _emit(args, payload, "\n".join(lines))
        return 0

    if args.command == "hbar":
        poly = _resolve_poly(args)
        res = pure_entropy(poly, args.prime, args.nbudget, args.precision,
                           solenoid_convention=args.solenoid)
        _emit(args, res.to_dict(),
              f"hbar_{args.prime} = {res.value.digit_string()}")
        return 0

    if args.command == "homology":
        poly = _resolve_poly(args)
        order, caveat = branched_cover_homology_order(poly, args.n,
                                                      args.components)
        note = " (up to a bounded factor)" if caveat else ""
        _emit(args, {"n": args.n, "order": str(order), "caveat": caveat},
              f"|H_1(M_{args.n})| = {order}{note}")
        return 0

    if args.command == "growth":
        poly = _resolve_poly(args)
        place = _place(args.place)
        if args.pure:
            if place == INFINITY:
                raise DomainError("--pure needs a finite place")
            res = pure_link_growth(poly, args.components, place,
                                   n_budget=args.nmax,
                                   precision=args.precision)
            _emit(args, res.to_dict(),
                  f"purely {place}-adic growth limit = "
                  f"{res.value.digit_string()}")
            return 0
        rep = resultant_limit_estimate(poly, place, args.nmax,
                                       skip_p_multiples=args.skip_p_multiples)
        n_last, est_last = rep.estimates(args.skip_p_multiples)[-1]
        _emit(args, rep.to_dict(),
              f"estimate at n={n_last}: {est_last:.10f}; extrapolated "
              f"{rep.limit:.10f}; closed form {rep.closed_form:.10f} "
              f"(|diff| = {rep.abs_error:.2e})")
        return 0

    if args.command == "verify-corpus":
        records = load_corpus(args.corpus)
        report = verify_corpus(records, tol=args.tol)
        if args.format == "json":
            print(report.to_json())
        else:
            print(report.to_text())
        return report.exit_status

    raise DomainError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except PrecisionError as exc:
        print(f"precision error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except ConvergenceError as exc:
        print(f"convergence error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
