"""From a cubic and one of its real roots to a (c, M) representation and its CF.

The selected root rho is written as M(S(c)) where S(c) is the hypergeometric
root of x^3 - c x + c and M is a rational Moebius map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cf import PolyCF, RateFit, certified_errors, convergent_values, estimate_rate, euler_to_cf, splice_moebius
from .errors import DegreeError, PoleError, PrecisionError, ReducibleError, SelectorError
from .exact import Interval, Poly, as_rational, count_roots, discriminant, isolate_real_roots, is_irreducible_cubic, refine_root
from .field import FieldElem, Moebius, elem_charpoly, embed, moebius_relate
from .series import s_series
from .transform import (
    CRITICAL_C,
    REDUCIBLE_C,
    RootLabel,
    boost_polys,
    boost_ratio,
    c_poly,
    classify_root,
    depress,
    normalize_c,
    phi_moebius,
    phi_step,
    ratio,
)

DEFAULT_MIN_ABS_C = REDUCIBLE_C + CRITICAL_C  # 81/4
TOTALLY_REAL_MARGIN = Fraction(1)
COMPLEX_MARGIN = Fraction(11, 10)
UNIFORM_BUDGET = 2000

_SERIES_ROOTS = (RootLabel.BETA2, RootLabel.UNIQUE_REAL)


@dataclass(frozen=True)
class RootSelector:
    """Either the index among real roots in ascending order, or an isolating interval."""

    index: int | None = None
    interval: Interval | None = None

    def __post_init__(self):
        if (self.index is None) == (self.interval is None):
            raise SelectorError("give exactly one of index or interval")

    def resolve(self, p: Poly) -> Interval:
        if self.index is not None:
            roots = isolate_real_roots(p)
            if not 0 <= self.index < len(roots):
                raise SelectorError(f"root index {self.index} out of range: {p} has {len(roots)} real roots")
            return roots[self.index]
        n = count_roots(p, self.interval)
        if n != 1:
            raise SelectorError(f"interval {self.interval} holds {n} real roots of {p}, expected 1")
        return self.interval


def series_root(c, eps) -> Interval:
    """Enclosure of width <= eps of the root of x^3 - c x + c that S(c) sums to."""
    c = as_rational(c)
    p = c_poly(c)
    for iv in isolate_real_roots(p):
        if classify_root(c, iv) in _SERIES_ROOTS:
            return refine_root(p, iv, eps)
    raise AssertionError(f"no series root for c = {c}")  # pragma: no cover


@dataclass(frozen=True)
class Representation:
    c: Fraction
    M: Moebius

    def __post_init__(self):
        object.__setattr__(self, "c", as_rational(self.c))
        if abs(self.c) <= CRITICAL_C:
            raise ValueError(f"|c| must exceed 27/4, got {self.c}")

    def value_interval(self, eps) -> Interval:
        """Certified enclosure of M(S(c)) of width <= eps."""
        eps = as_rational(eps)
        inner = eps
        while True:
            try:
                out = self.M(series_root(self.c, inner))
            except PoleError:
                inner /= 2**32
                continue
            if out.width <= eps:
                return out
            inner = inner * eps / (2 * out.width) if out.width else inner / 2

    def canonical(self) -> Representation:
        return Representation(self.c, self.M.canonical())


@dataclass
class Trace:
    """What the pipeline did on the way to a representation."""

    discriminant: Fraction
    boosted_d: Fraction | None = None
    c_chain: list[Fraction] = field(default_factory=list)
    labels: list[RootLabel] = field(default_factory=list)

    @property
    def phi_steps(self) -> int:
        return len(self.c_chain) - 1


def _label(s: FieldElem, root_iv: Interval, c: Fraction) -> RootLabel:
    """Which root of x^3 - c x + c is the image of s under theta -> selected root."""
    roots = isolate_real_roots(c_poly(c))
    eps = min(iv.width for iv in roots) / 4
    while True:
        img = embed(s, root_iv, eps)
        hits = [iv for iv in roots if iv.intersects(img)]
        if len(hits) == 1:
            return classify_root(c, hits[0])
        eps /= 2**16


def _chain(c: Fraction, label: RootLabel) -> list[tuple[Fraction, RootLabel]]:
    """c values and labels along the phi steps."""
    out = [(c, label)]
    while label not in _SERIES_ROOTS:
        c, perm = phi_step(c)
        label = perm[label]
        out.append((c, label))
    return out


def simple_rationals():
    """0, then p/q ordered by height max(|p|, q), positives before negatives."""
    yield Fraction(0)
    h = 1
    while True:
        level = sorted(
            {Fraction(p, q) for q in range(1, h + 1) for p in range(1, h + 1) if max(p, q) == h and math.gcd(p, q) == 1}
        )
        for x in level:
            yield x
            yield -x
        h += 1


def _candidates(q: Poly, w: FieldElem, target: Fraction, max_candidates: int):
    a, b = q[1], q[0]
    if a != 0:
        yield None, w
    try:
        d, _, _ = boost_ratio(q, target)
        yield d, w * w + w * d + 2 * a / 3
    except AssertionError:  # pragma: no cover
        pass
    e, f = boost_polys(a, b)
    for _, d in zip(range(max_candidates), simple_rationals()):
        if f(d) != 0 and e(d) != 0:
            yield d, w * w + w * d + 2 * a / 3


def _uniform(c: Fraction, need: Fraction) -> bool:
    ends = [_chain(c, label)[-1][0] for label in (RootLabel.BETA1, RootLabel.BETA2, RootLabel.BETA3)]
    return min(ends) >= need


def _per_root(q, w, root_iv, need, totally_real, max_candidates):
    for d, g in _candidates(q, w, need * 4 / 27, max_candidates):
        c, affine = normalize_c(elem_charpoly(g))
        if totally_real and c <= REDUCIBLE_C + TOTALLY_REAL_MARGIN:
            continue
        if abs(c) <= CRITICAL_C * COMPLEX_MARGIN:
            continue
        v = affine(g)
        chain = _chain(c, _label(v, root_iv, c))
        if abs(chain[-1][0]) >= need:
            return d, c, v, chain
    return None


def build(
    p: Poly, sel: RootSelector, min_abs_c=DEFAULT_MIN_ABS_C, max_candidates: int = 20000
) -> tuple[Representation, Trace]:
    """Run the full construction and return the representation with its trace.

    Candidate elements g (theta itself, the boosted element, then
    theta^2 + D theta + 2a/3 for simple rationals D) are tried in turn. For a
    totally real field the first g whose chains end at |c| >= the target for
    all three roots is preferred, so every root of the field shares one c.
    Otherwise the first g whose chain for the selected root ends at
    |c| >= the target is kept.
    """
    if p.degree != 3:
        raise DegreeError(f"need a cubic, got degree {p.degree}")
    min_abs_c = as_rational(min_abs_c)
    if min_abs_c < CRITICAL_C:
        raise ValueError("min_abs_c must be >= 27/4")
    if not is_irreducible_cubic(p):
        raise ReducibleError(f"{p} has a rational root")
    pm = p.monic()
    root_iv = sel.resolve(pm)
    theta = FieldElem.theta(pm)
    disc = discriminant(pm)
    totally_real = disc > 0

    need = max(min_abs_c, REDUCIBLE_C + TOTALLY_REAL_MARGIN if totally_real else CRITICAL_C * COMPLEX_MARGIN)
    q, _ = depress(pm)
    w = theta + pm[2] / 3
    found = None
    if totally_real:
        # prefer one g for the whole field: its three roots then take 0, 1 and 2 steps
        budget = min(max_candidates, UNIFORM_BUDGET)
        for d, g in _candidates(q, w, need * 4 / 27, budget):
            c, affine = normalize_c(elem_charpoly(g))
            if c > REDUCIBLE_C + TOTALLY_REAL_MARGIN and _uniform(c, need):
                v = affine(g)
                found = d, c, v, _chain(c, _label(v, root_iv, c))
                break
    if found is None:
        found = _per_root(q, w, root_iv, need, totally_real, max_candidates)
    if found is None:
        raise AssertionError(f"no candidate reached |c| >= {need} for {p}")
    d, c, v, chain = found
    assert elem_charpoly(v) == c_poly(c)
    trace = Trace(discriminant=disc, boosted_d=d)

    s = v
    maps = []
    for (c_i, label), (c_next, expected) in zip(chain, chain[1:]):
        phi = phi_moebius(c_i)
        s = phi(s)
        maps.append(phi)
        assert elem_charpoly(s) == c_poly(c_next)
        assert _label(s, root_iv, c_next) == expected
    trace.c_chain = [c_i for c_i, _ in chain]
    trace.labels = [label for _, label in chain]
    m = moebius_relate(s, theta)
    composed = moebius_relate(v, theta)
    for phi in maps:
        composed = composed @ phi.inverse()
    assert composed.equivalent(m)
    return Representation(chain[-1][0], m.canonical()), trace


def represent(p: Poly, sel: RootSelector, min_abs_c=DEFAULT_MIN_ABS_C) -> Representation:
    return build(p, sel, min_abs_c)[0]


def to_cf(rep: Representation) -> PolyCF:
    return splice_moebius(rep.M, euler_to_cf(s_series(rep.c)))


@dataclass
class Report:
    rep: Representation
    depth: int
    tol: Fraction
    errors: dict[int, Interval]
    passed: bool
    rate: RateFit | None
    expected_base: Fraction

    @property
    def final_error(self) -> Interval:
        return self.errors[max(self.errors)]


def _errors_with_refinement(cf: PolyCF, p: Poly, root_iv: Interval, depths, start_eps: Fraction):
    eps = start_eps
    while True:
        lim = refine_root(p, root_iv, eps)
        try:
            return certified_errors(cf, lim, depths)
        except PrecisionError:
            eps /= 2**64


def verify(rep: Representation, p: Poly, sel: RootSelector, depth: int, tol) -> Report:
    """Certified per-depth errors of rep's CF against the selected root of P."""
    tol = as_rational(tol)
    pm = p.monic()
    root_iv = sel.resolve(pm)
    cf = to_cf(rep)
    vals = convergent_values(cf, depth)
    if vals[depth] is None:
        raise PrecisionError(f"convergent at depth {depth} is undefined")
    depths = [n for n in range(depth + 1) if vals[n] is not None]
    errors = _errors_with_refinement(cf, pm, root_iv, depths, min(tol, Fraction(1, 10**6)) / 10**6)
    passed = errors[depth].hi <= tol
    expected = 4 * abs(rep.c) / 27
    rate = None
    lo, hi = max(depth // 4, 5), depth
    if passed and hi - lo >= 10:
        lim = refine_root(pm, root_iv, errors[depth].lo / 10**6)
        rate = estimate_rate(cf, lim, lo, hi)
    return Report(rep, depth, tol, errors, passed, rate, expected)
