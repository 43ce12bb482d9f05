"""Transforms of cubic polynomials toward the shape x^3 - c x + c.

Covers the ratio invariant, depression, the ratio-boosting search, the
normalization to x^3 - c x + c, root labelling and the phi_c step.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .errors import DegreeError, RatioUndefinedError, ReducibleError
from .exact import (
    Interval,
    Poly,
    as_rational,
    isolate_real_roots,
    refine_root,
    sign_at,
    squarefree_part,
)
from .field import FieldElem, Moebius, elem_charpoly

CRITICAL_C = Fraction(27, 4)
REDUCIBLE_C = Fraction(27, 2)
CUTS = (Fraction(-3), Fraction(1), Fraction(3, 2))


def ratio(p: Poly) -> Fraction:
    """r(P) = 4(3ac - b^2)^3 / (27a^2 d - 9abc + 2b^3)^2 for P = ax^3+bx^2+cx+d."""
    if p.degree != 3:
        raise DegreeError(f"ratio needs a cubic, got degree {p.degree}")
    d, c, b, a = p.coeffs
    den = 27 * a * a * d - 9 * a * b * c + 2 * b**3
    if den == 0:
        raise RatioUndefinedError(f"ratio of {p} is undefined")
    return 4 * (3 * a * c - b * b) ** 3 / den**2


def depress(p: Poly) -> tuple[Poly, Moebius]:
    """Monic depressed form x^3 + a x + b, and the map from its roots to P's roots."""
    if p.degree != 3:
        raise DegreeError(f"depress needs a cubic, got degree {p.degree}")
    m = p.monic()
    shift = m[2] / 3
    q = m.shift(-shift)
    assert q[2] == 0
    return q, Moebius.affine(1, -shift)


def boost_polys(a, b) -> tuple[Poly, Poly]:
    """e(D), f(D): charpoly of theta^2 + D theta + 2a/3 is x^3 + e x + f."""
    a, b = as_rational(a), as_rational(b)
    e = Poly((-a * a / 3, 3 * b, a))
    f = Poly((-(b * b + 2 * a**3 / 27), -a * b, -2 * a * a / 3, b))
    return e, f


def _depressed_coeffs(p: Poly) -> tuple[Fraction, Fraction]:
    if p.degree != 3 or p.lc != 1 or p[2] != 0:
        raise ValueError(f"{p} is not a monic depressed cubic")
    return p[1], p[0]


def boost_ratio(p: Poly, target, max_steps: int = 4000) -> tuple[Fraction, Poly, FieldElem]:
    """Find D with |ratio(charpoly(theta^2 + D theta + 2a/3))| >= target.

    Candidates are midpoints of shrinking isolating intervals of the real
    roots of f(D), taken in ascending order.
    """
    a, b = _depressed_coeffs(p)
    target = as_rational(target)
    if b == 0:
        raise ReducibleError(f"{p} vanishes at 0")
    e, f = boost_polys(a, b)
    fs = squarefree_part(f)
    for iv in isolate_real_roots(fs):
        for _ in range(max_steps):
            d = iv.mid
            ev, fv = e(d), f(d)
            if fv != 0 and abs(4 * ev**3) >= 27 * fv * fv * target:
                theta = FieldElem.theta(p)
                g = theta * theta + theta * d + 2 * a / 3
                q = elem_charpoly(g)
                assert q == Poly((fv, ev, 0, 1)), (q, ev, fv)
                return d, q, g
            iv = _halve(fs, iv)
    raise AssertionError(f"no D reached ratio {target} for {p}")


def _halve(p: Poly, iv: Interval) -> Interval:
    mid = iv.mid
    s = sign_at(p, mid)
    if s == 0:
        return Interval(mid, mid)
    return Interval(iv.lo, mid) if s != sign_at(p, iv.lo) else Interval(mid, iv.hi)


def normalize_c(p: Poly) -> tuple[Fraction, Moebius]:
    """c and the affine map u -> v with charpoly(v) = x^3 - c x + c.

    For charpoly x^3 + a2 x^2 + a1 x + a0 of u,
    v = ((9 a2^2 - 27 a1) / (27 a0 + 2 a2^3 - 9 a1 a2)) (u + a2/3).
    """
    if p.degree != 3:
        raise DegreeError(f"normalize_c needs a cubic, got degree {p.degree}")
    m = p.monic()
    a0, a1, a2 = m[0], m[1], m[2]
    num = 9 * a2 * a2 - 27 * a1
    den = 27 * a0 + 2 * a2**3 - 9 * a1 * a2
    if num == 0 or den == 0:
        raise RatioUndefinedError(f"ratio of {p} is zero or undefined; boost first")
    lam = num / den
    # depressed form x^3 + px + q of u + a2/3
    pp = a1 - a2 * a2 / 3
    c = -lam * lam * pp
    return c, Moebius.affine(lam, lam * a2 / 3)


def c_poly(c) -> Poly:
    c = as_rational(c)
    return Poly((c, -c, 0, 1))


class RootLabel(str, enum.Enum):
    BETA1 = "beta1"
    BETA2 = "beta2"
    BETA3 = "beta3"
    UNIQUE_REAL = "unique_real"


SEPARATION = Fraction(1, 10**6)


def classify_root(c, root_iv: Interval, max_halvings: int = 20000) -> RootLabel:
    """Label a real root of x^3 - c x + c against the cut points -3, 1, 3/2."""
    c = as_rational(c)
    if abs(c) <= CRITICAL_C:
        raise ValueError(f"|c| must exceed 27/4, got {c}")
    if c < 0:
        return RootLabel.UNIQUE_REAL
    p = c_poly(c)
    iv = refine_root(p, root_iv, SEPARATION)
    for _ in range(max_halvings):
        if iv.hi < CUTS[0]:
            return RootLabel.BETA1
        if CUTS[1] < iv.lo and iv.hi < CUTS[2]:
            return RootLabel.BETA2
        if CUTS[2] < iv.lo:
            return RootLabel.BETA3
        if iv.width == 0:
            break
        iv = refine_root(p, iv, iv.width / 2)
    raise AssertionError(f"{root_iv} does not isolate a root of {p} away from the cut points")


def phi_moebius(c) -> Moebius:
    """phi_c(x) = 3c(x - 3) / ((2c - 27) x)."""
    c = as_rational(c)
    return Moebius(3 * c, -9 * c, 2 * c - 27, 0)


_PERM_BELOW = {RootLabel.BETA1: RootLabel.BETA1, RootLabel.BETA2: RootLabel.BETA3, RootLabel.BETA3: RootLabel.BETA2}
_PERM_ABOVE = {RootLabel.BETA1: RootLabel.BETA3, RootLabel.BETA2: RootLabel.BETA1, RootLabel.BETA3: RootLabel.BETA2}


def phi_step(c) -> tuple[Fraction, dict[RootLabel, RootLabel]]:
    """C = 27c^2/(2c - 27)^2 and where phi_c sends each labelled root."""
    c = as_rational(c)
    if c <= CRITICAL_C:
        raise ValueError(f"phi_step needs c > 27/4, got {c}")
    if c == REDUCIBLE_C:
        raise ReducibleError("x^3 - (27/2)x + 27/2 is reducible")
    big_c = 27 * c * c / (2 * c - 27) ** 2
    return big_c, dict(_PERM_BELOW if c < REDUCIBLE_C else _PERM_ABOVE)
