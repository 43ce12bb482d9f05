"""cubicpcf command line: represent, eval, verify, power, trinomial.

Exit codes: 0 ok, 1 tolerance not met, 2 parse error, 3 reducible input,
4 bad root selector, 5 precision/depth insufficient, 6 divergent series.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from fractions import Fraction

from .cf import PolyCF, euler_to_cf, value
from .errors import DivergenceError, PrecisionError, ReducibleError, SelectorError
from .exact import Interval, Poly, count_roots, is_irreducible_cubic, isolate_real_roots, refine_root
from .field import FieldElem, Moebius, elem_charpoly
from .pipeline import DEFAULT_MIN_ABS_C, Representation, RootSelector, build, to_cf, verify
from .serialize import (
    ParseError,
    cf_to_json,
    parse_interval,
    parse_poly,
    parse_rational,
    parse_rationals,
    representation_from_json,
    representation_to_json,
)
from .series import exact_rational_power, power_series, trinomial_series
from .transform import c_poly

EXIT_OK, EXIT_TOL, EXIT_PARSE, EXIT_REDUCIBLE, EXIT_SELECTOR, EXIT_PRECISION, EXIT_DIVERGENCE = range(7)


def decimal_digits(iv: Interval, digits: int) -> str | None:
    """The decimal truncated to ``digits`` places shared by every point of iv, if any."""
    if iv.lo < 0 < iv.hi:
        return None
    scale = 10**digits
    lo_t = math.floor(abs(iv.lo) * scale)
    hi_t = math.floor(abs(iv.hi) * scale)
    if lo_t != hi_t:
        return None
    sign = "-" if iv.hi < 0 or (iv.lo < 0 and iv.hi == 0) else ""
    whole, frac = divmod(lo_t, scale)
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


def certify(approx: Fraction, limit, digits: int, max_rounds: int = 40) -> str:
    """Certified decimal of the limit, requiring |approx - limit| < 10^-digits.

    ``limit(eps)`` returns an enclosure of the limit of width <= eps.  The
    output depends on the limit alone, so it is stable in the depth.
    """
    tol = Fraction(1, 10**digits)
    eps = tol / 10**6
    for _ in range(max_rounds):
        lim = limit(eps)
        diff = Interval(approx, approx) - lim
        if diff.mig() >= tol:
            raise PrecisionError(f"convergent is {float(diff.mig()):.3g} from the limit; {digits} digits need more depth")
        text = decimal_digits(lim, digits)
        if text is not None and diff.mag() < tol:
            return text
        eps /= 2**32
    raise PrecisionError(f"could not certify {digits} digits")


def _selector(args) -> RootSelector:
    if args.root_interval is not None:
        return RootSelector(interval=parse_interval(args.root_interval))
    if args.root_index is not None:
        return RootSelector(index=args.root_index)
    raise SelectorError("give --root-index or --root-interval")


def _emit(args, obj: dict, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(obj, indent=2))
    else:
        print("\n".join(lines))


def _verified_digits(rep: Representation, poly: Poly, sel: RootSelector, depth: int) -> int:
    report = verify(rep, poly, sel, depth, 1)
    hi = report.final_error.hi
    return max(0, math.floor(-math.log10(hi))) if hi < 1 else 0


def cmd_represent(args) -> int:
    poly = parse_poly(args.poly)
    sel = _selector(args)
    min_c = parse_rational(args.min_c) if args.min_c is not None else DEFAULT_MIN_ABS_C
    rep, trace = build(poly, sel, min_c)
    cf = to_cf(rep)
    digits = _verified_digits(rep, poly, sel, args.depth)
    root_iv = sel.resolve(poly.monic())
    obj = representation_to_json(rep, cf, digits)
    obj["poly"] = str(poly)
    obj["root_interval"] = [str(root_iv.lo), str(root_iv.hi)]
    obj["phi_steps"] = trace.phi_steps
    lines = [
        f"c = {rep.c}",
        f"M = [[{rep.M.a}, {rep.M.b}], [{rep.M.c}, {rep.M.d}]]",
        f"cf = {cf}",
        f"phi steps = {trace.phi_steps}",
        f"verified digits at depth {args.depth} = {digits}",
    ]
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_eval(args) -> int:
    a, b, c, d = parse_rationals(args.matrix, 4)
    rep = Representation(parse_rational(args.c), Moebius(a, b, c, d))
    cf = to_cf(rep)
    v = value(cf, args.depth)
    if v is None:
        raise PrecisionError(f"convergent at depth {args.depth} is undefined")
    text = certify(v, rep.value_interval, args.digits)
    _emit(args, {"depth": args.depth, "convergent": str(v), "value": text, "digits": args.digits},
          [f"convergent = {v}", f"value = {text}"])
    return EXIT_OK


def _rep_target(rep: Representation) -> tuple[Poly, RootSelector]:
    """Minimal polynomial of M(S(c)) and an isolating interval for it."""
    p = c_poly(rep.c)
    if not is_irreducible_cubic(p):
        raise ReducibleError(f"{p} is reducible")
    charpoly = elem_charpoly(rep.M(FieldElem.theta(p)))
    eps = Fraction(1, 2**20)
    while True:
        iv = rep.value_interval(eps)
        if count_roots(charpoly, iv) == 1:
            return charpoly, RootSelector(interval=iv)
        eps /= 2**20


def cmd_verify(args) -> int:
    stored = None
    if args.rep is not None:
        with open(args.rep) as fh:
            stored = json.load(fh)
        rep = representation_from_json(stored)
    elif args.c is not None and args.matrix is not None:
        rep = Representation(parse_rational(args.c), Moebius(*parse_rationals(args.matrix, 4)))
    else:
        rep = None

    if args.poly is not None:
        poly, sel = parse_poly(args.poly), _selector(args)
    elif stored is not None and "poly" in stored and "root_interval" in stored:
        poly = parse_poly(stored["poly"])
        sel = RootSelector(interval=Interval(*(parse_rational(x) for x in stored["root_interval"])))
    elif rep is not None:
        poly, sel = _rep_target(rep)
    else:
        raise ParseError("give --poly with a root selector, or a representation")
    if rep is None:
        rep = build(poly, sel)[0]

    tol = parse_rational(args.tol)
    report = verify(rep, poly, sel, args.depth, tol)
    base = report.expected_base
    step = max(1, args.step)
    rows = [n for n in sorted(report.errors) if n >= 1 and (n % step == 0 or n == args.depth)]
    sep = "\t" if args.table else "  "
    print(sep.join(["n", "error", "scaled"]))
    for n in rows:
        err = report.errors[n].mid
        scaled = math.exp(math.log(err.numerator) - math.log(err.denominator) + n * math.log(base)) * n**1.5
        print(sep.join([str(n), f"{float(err):.6e}", f"{scaled:.6e}"]))
    rate = report.rate
    print(f"# c = {rep.c}  E = 4|c|/27 = {float(base):.6g}")
    if rate is not None:
        print(f"# E_est = {rate.base:.6g}  exponent_est = {rate.exponent:.4g}  C_est = {rate.constant:.4g}")
    status = "PASS" if report.passed else "FAIL"
    print(f"# {status}: error at depth {args.depth} = {float(report.final_error.hi):.3e}, tol = {float(tol):.3e}")
    return EXIT_OK if report.passed else EXIT_TOL


def _series_output(args, cf: PolyCF, limit, extra: dict) -> int:
    v = value(cf, args.depth)
    if v is None:
        raise PrecisionError(f"convergent at depth {args.depth} is undefined")
    text = certify(v, limit, args.digits)
    obj = dict(extra, cf=cf_to_json(cf), depth=args.depth, convergent=str(v), value=text, digits=args.digits)
    _emit(args, obj, [f"cf = {cf}", f"convergent = {v}", f"value = {text}"])
    return EXIT_OK


def cmd_power(args) -> int:
    u, e = parse_rational(args.base), parse_rational(args.exp)
    if u <= 0:
        raise ParseError("base must be positive")
    exact = exact_rational_power(u, e)
    if exact is not None:
        _emit(args, {"exact": str(exact)}, [f"value = {exact} (exact)"])
        return EXIT_OK
    f = parse_rational(args.f) if args.f is not None else None
    f, _, spec = power_series(u, e, f)
    # u^(m/d) is the positive root of x^d - u^m
    d, w = e.denominator, u**e.numerator
    p = Poly((-w,) + (0,) * (d - 1) + (1,))
    bracket = Interval(Fraction(0), max(Fraction(1), w))
    return _series_output(args, euler_to_cf(spec), lambda eps: refine_root(p, bracket, eps), {"f": str(f)})


def cmd_trinomial(args) -> int:
    a, b = parse_rational(args.a), parse_rational(args.b)
    spec = trinomial_series(args.k, a, b)
    cf = euler_to_cf(spec)
    p = Poly((b, a) + (0,) * (args.k - 2) + (1,))
    roots = isolate_real_roots(p)
    v = value(cf, args.depth)
    if v is None or not roots:
        raise PrecisionError("no real root to compare against")
    iv = min(roots, key=lambda r: abs(r.mid - v) if not r.contains(v) else -1)
    return _series_output(args, cf, lambda eps: refine_root(p, iv, eps), {"poly": str(p)})


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cubicpcf", description="Polynomial continued fractions for cubic irrationals.")
    sub = ap.add_subparsers(dest="command", required=True)

    def selector(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--root-index", type=int, help="index among real roots, ascending")
        g.add_argument("--root-interval", help='isolating interval "lo,hi"')

    p = sub.add_parser("represent", help="build (c, M) and its continued fraction")
    p.add_argument("--poly", required=True)
    selector(p)
    p.add_argument("--min-c", help="lower bound on |c| (default 81/4)")
    p.add_argument("--depth", type=int, default=100, help="depth used for verified_digits")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("eval", help="evaluate a representation at a depth")
    p.add_argument("--c", required=True)
    p.add_argument("--matrix", required=True, help='"a,b,c,d"')
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--digits", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="certified error table")
    p.add_argument("--poly")
    selector(p)
    p.add_argument("--rep", help="representation JSON file")
    p.add_argument("--c")
    p.add_argument("--matrix", help='"a,b,c,d"')
    p.add_argument("--depth", type=int, default=80)
    p.add_argument("--tol", default=f"1/{10**30}")
    p.add_argument("--step", type=int, default=1, help="print every step-th depth")
    p.add_argument("--table", action="store_true", help="tab-separated output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("power", help="u^(m/d) by the binomial series")
    p.add_argument("--base", required=True)
    p.add_argument("--exp", required=True)
    p.add_argument("--f", help="approximation of u^(-1/d)")
    p.add_argument("--depth", type=int, default=40)
    p.add_argument("--digits", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("trinomial", help="root of x^k + a x + b by its series")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--depth", type=int, default=30)
    p.add_argument("--digits", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_trinomial)
    return ap


_NEGATIVE_VALUE = re.compile(r"^-[\d(]")


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-1,6,1,3" or "-1/3" as an option; glue it to its flag
    out: list[str] = []
    for tok in argv:
        if out and _NEGATIVE_VALUE.match(tok) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = _parser().parse_args(_glue_negative_values(argv))
    try:
        return args.func(args)
    except (ParseError, json.JSONDecodeError, OSError) as exc:
        code, msg = EXIT_PARSE, exc
    except ReducibleError as exc:
        code, msg = EXIT_REDUCIBLE, exc
    except SelectorError as exc:
        code, msg = EXIT_SELECTOR, exc
    except PrecisionError as exc:
        code, msg = EXIT_PRECISION, exc
    except DivergenceError as exc:
        code, msg = EXIT_DIVERGENCE, exc
    except ValueError as exc:
        code, msg = EXIT_PARSE, exc
    print(f"cubicpcf: error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
