"""Text and JSON formats: polynomial input, rationals as strings, CF and representation records."""

from __future__ import annotations

import re
from fractions import Fraction

from .cf import PolyCF
from .exact import Interval, Poly
from .field import Moebius
from .pipeline import Representation


class ParseError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    t = text.strip()
    if t.startswith("(") and t.endswith(")"):
        t = t[1:-1]
    try:
        if re.fullmatch(r"[+-]?\d+(/\d+)?", t.replace(" ", "")) is None:
            raise ValueError(t)
        return Fraction(t.replace(" ", ""))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc


_TERM = re.compile(r"(?:\((?P<pc>\d+(?:/\d+)?)\)|(?P<c>\d+(?:/\d+)?))?\*?(?P<x>x(?:\^(?P<e>\d+))?)?")


def parse_poly(text: str) -> Poly:
    """Parse e.g. ``"x^3 - 6x + 6"`` or ``"2x^3+(1/2)x-3/4"``."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ParseError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"[+-][^+-]*", s)
    if "".join(pieces) != s:
        raise ParseError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, Fraction] = {}
    for piece in pieces:
        sign, body = piece[0], piece[1:]
        m = _TERM.fullmatch(body)
        if not body or m is None or (m["x"] is None and m["c"] is None and m["pc"] is None):
            raise ParseError(f"bad term {piece!r} in {text!r}")
        raw = m["pc"] or m["c"]
        coef = parse_rational(raw) if raw else Fraction(1)
        if sign == "-":
            coef = -coef
        exp = 0 if m["x"] is None else int(m["e"] or 1)
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + coef
    top = max(coeffs)
    return Poly(coeffs.get(i, Fraction(0)) for i in range(top + 1))


def parse_rationals(text: str, count: int | None = None) -> list[Fraction]:
    items = [parse_rational(t) for t in text.split(",")]
    if count is not None and len(items) != count:
        raise ParseError(f"expected {count} comma-separated rationals, got {len(items)}")
    return items


def parse_interval(text: str) -> Interval:
    lo, hi = parse_rationals(text, 2)
    if lo > hi:
        raise ParseError(f"empty interval {text!r}")
    return Interval(lo, hi)


def q(x: Fraction) -> str:
    return str(x)


def cf_to_json(cf: PolyCF) -> dict:
    return {
        "a_head": [q(x) for x in cf.a_head],
        "A": [q(x) for x in cf.A.coeffs],
        "n_a": cf.n_a,
        "b_head": [q(x) for x in cf.b_head],
        "B": [q(x) for x in cf.B.coeffs],
        "n_b": cf.n_b,
    }


def cf_from_json(obj: dict) -> PolyCF:
    cf = PolyCF(
        tuple(parse_rational(x) for x in obj["a_head"]),
        Poly(parse_rational(x) for x in obj["A"]),
        tuple(parse_rational(x) for x in obj["b_head"]),
        Poly(parse_rational(x) for x in obj["B"]),
    )
    if cf.n_a != obj.get("n_a", cf.n_a) or cf.n_b != obj.get("n_b", cf.n_b):
        raise ParseError("thresholds do not match head lengths")
    return cf


def moebius_to_json(m: Moebius) -> list[list[str]]:
    return [[q(m.a), q(m.b)], [q(m.c), q(m.d)]]


def moebius_from_json(rows) -> Moebius:
    try:
        (a, b), (c, d) = rows
    except (TypeError, ValueError) as exc:
        raise ParseError("matrix must be [[a, b], [c, d]]") from exc
    return Moebius(*(parse_rational(str(x)) for x in (a, b, c, d)))


def representation_to_json(rep: Representation, cf: PolyCF | None = None, verified_digits: int | None = None) -> dict:
    out: dict = {"c": q(rep.c), "matrix": moebius_to_json(rep.M)}
    if cf is not None:
        out["cf"] = cf_to_json(cf)
    if verified_digits is not None:
        out["verified_digits"] = verified_digits
    return out


def representation_from_json(obj: dict) -> Representation:
    try:
        return Representation(parse_rational(str(obj["c"])), moebius_from_json(obj["matrix"]))
    except KeyError as exc:
        raise ParseError(f"missing field {exc}") from exc
