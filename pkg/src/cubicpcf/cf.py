"""Polynomial-type continued fractions.

A CF a(0) + b(0)/(a(1) + b(1)/(a(2) + ...)) is stored as finite heads plus
polynomial tails.  Depth n means the truncation using a(0..n) and b(0..n-1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

import numpy as np

from . import kernels
from .errors import PrecisionError
from .exact import Interval, Poly, as_rational, rational_roots
from .field import Moebius
from .series import SeriesSpec


@lru_cache(maxsize=512)
def _integer_roots_above(coeffs: tuple, threshold: int) -> tuple[int, ...]:
    p = Poly(coeffs)
    if p.is_zero():
        return (threshold + 1,)
    if p.degree == 0:
        return ()
    return tuple(int(r) for r in rational_roots(p) if r.denominator == 1 and r > threshold)


@dataclass(frozen=True)
class PolyCF:
    """CF with a(n) = a_head[n] for n <= n_a, else A(n); likewise b, B."""

    a_head: tuple[Fraction, ...]
    A: Poly
    b_head: tuple[Fraction, ...]
    B: Poly

    def __post_init__(self):
        object.__setattr__(self, "a_head", tuple(as_rational(x) for x in self.a_head))
        object.__setattr__(self, "b_head", tuple(as_rational(x) for x in self.b_head))
        if not self.a_head or not self.b_head:
            raise ValueError("heads must hold at least a(0) and b(0)")
        if any(x == 0 for x in self.b_head):
            raise ValueError("b(n) = 0 in the head")
        bad = _integer_roots_above(self.B.coeffs, self.n_b)
        if bad:
            raise ValueError(f"b(n) = 0 at n = {bad[0]}")

    @property
    def n_a(self) -> int:
        return len(self.a_head) - 1

    @property
    def n_b(self) -> int:
        return len(self.b_head) - 1

    def a(self, n: int) -> Fraction:
        return self.a_head[n] if n <= self.n_a else self.A(Fraction(n))

    def b(self, n: int) -> Fraction:
        return self.b_head[n] if n <= self.n_b else self.B(Fraction(n))

    def coefficients(self, depth: int) -> tuple[list[Fraction], list[Fraction]]:
        return [self.a(n) for n in range(depth + 1)], [self.b(n) for n in range(depth)]

    def a_zero_indices(self) -> list[int]:
        """Indices n >= 1 with a(n) = 0 (permitted, but only finitely many)."""
        head = [n for n in range(1, self.n_a + 1) if self.a_head[n] == 0]
        return head + list(_integer_roots_above(self.A.coeffs, self.n_a)) if self.A else head

    def __str__(self):
        a = ", ".join(str(x) for x in self.a_head)
        b = ", ".join(str(x) for x in self.b_head)
        return f"(({a}, {self.A.__str__().replace('x', 'n')}), ({b}, {self.B.__str__().replace('x', 'n')}))"


def _integerize(a: list[Fraction], b: list[Fraction]) -> tuple[list[int], list[int], int]:
    """Equivalence transform to integer coefficients.

    Returns integer sequences with the same convergent values scaled by the
    returned factor lam0: value = p / (lam0 * q).
    """
    lam_prev = a[0].denominator
    ai = [int(a[0] * lam_prev)]
    bi = []
    lam0 = lam_prev
    for k in range(1, len(a)):
        x = lam_prev * b[k - 1]
        lam = math.lcm(a[k].denominator, x.denominator)
        ai.append(int(a[k] * lam))
        bi.append(int(x * lam))
        lam_prev = lam
    return ai, bi, lam0


def convergents(cf: PolyCF, depth: int) -> list[tuple[Fraction, Fraction]]:
    """Exact (p(n), q(n)) for n = 0..depth from the three-term recurrence."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    a, b = cf.coefficients(depth)
    p_prev, p = Fraction(1), a[0]
    q_prev, q = Fraction(0), Fraction(1)
    out = [(p, q)]
    for n in range(1, depth + 1):
        p_prev, p = p, a[n] * p + b[n - 1] * p_prev
        q_prev, q = q, a[n] * q + b[n - 1] * q_prev
        out.append((p, q))
    return out


def convergent_values(cf: PolyCF, depth: int) -> list[Fraction | None]:
    """p(n)/q(n) for n = 0..depth; None where q(n) = 0 (skipped convergent)."""
    a, b = cf.coefficients(depth)
    ai, bi, lam0 = _integerize(a, b)
    ps, qs = kernels.cf_recurrence(ai, bi)
    return [Fraction(p, lam0 * q) if q else None for p, q in zip(ps, qs)]


def value(cf: PolyCF, depth: int) -> Fraction | None:
    a, b = cf.coefficients(depth)
    ai, bi, lam0 = _integerize(a, b)
    p, q = kernels.cf_final(ai, bi)
    return Fraction(p, lam0 * q) if q else None


@dataclass(frozen=True)
class ConvergentState:
    p_prev: Fraction
    p_curr: Fraction
    q_prev: Fraction
    q_curr: Fraction
    depth: int

    @classmethod
    def start(cls, cf: PolyCF) -> ConvergentState:
        return cls(Fraction(1), cf.a(0), Fraction(0), Fraction(1), 0)

    def advance(self, cf: PolyCF) -> ConvergentState:
        n = self.depth + 1
        an, bn = cf.a(n), cf.b(n - 1)
        return ConvergentState(
            self.p_curr,
            an * self.p_curr + bn * self.p_prev,
            self.q_curr,
            an * self.q_curr + bn * self.q_prev,
            n,
        )

    @property
    def value(self) -> Fraction | None:
        return self.p_curr / self.q_curr if self.q_curr else None


def segment_matrix(cf: PolyCF, lo: int, hi: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Product T(hi) ... T(lo) with T(n) = [[a(n), b(n-1)], [1, 0]] (lo >= 1).

    Segments are independent, so disjoint depth ranges can be evaluated
    separately and combined by matrix products.
    """
    m = (Fraction(1), Fraction(0), Fraction(0), Fraction(1))
    for n in range(lo, hi + 1):
        an, bn = cf.a(n), cf.b(n - 1)
        w, x, y, z = m
        m = (an * w + bn * y, an * x + bn * z, w, x)
    return m


def convergent_by_segments(cf: PolyCF, depth: int, cuts: list[int]) -> tuple[Fraction, Fraction]:
    """(p(depth), q(depth)) composed from segment matrices split at ``cuts``."""
    bounds = [1] + sorted(c for c in cuts if 1 < c <= depth) + [depth + 1]
    total = (Fraction(1), Fraction(0), Fraction(0), Fraction(1))
    for lo, hi in zip(bounds, bounds[1:]):
        w, x, y, z = segment_matrix(cf, lo, hi - 1)
        tw, tx, ty, tz = total
        total = (w * tw + x * ty, w * tx + x * tz, y * tw + z * ty, y * tx + z * tz)
    w, x, y, z = total
    # column vectors (p0, p_-1) = (a0, 1) and (q0, q_-1) = (1, 0)
    a0 = cf.a(0)
    return w * a0 + x, w


def euler_to_cf(spec: SeriesSpec) -> PolyCF:
    """CF whose depth-n convergent is exactly the n-th partial sum.

    With term ratio N(n)/Dn(n) cleared to integer coefficients:
    a = (t0, Dn(0), Dn(n-1) + N(n-1)),  b = (t0 N(0), -Dn(n-1) N(n)).
    """
    num, den = spec.ratio_num, spec.ratio_den
    scale = reduce(math.lcm, (c.denominator for c in num.coeffs + den.coeffs), 1)
    num, den = num * scale, den * scale
    prev_den = den.shift(-1)
    return PolyCF(
        (spec.t0, den(Fraction(0))),
        prev_den + num.shift(-1),
        (spec.t0 * num(Fraction(0)),),
        -(prev_den * num),
    )


def splice_moebius(m: Moebius, cf: PolyCF) -> PolyCF:
    """CF for M(x), x the value of ``cf``.

    For c != 0 the result is one level deeper: depth n+1 of the output is
    M applied to depth n of the input.  For c = 0 depths line up.
    """
    a, b, c, d = m.entries()
    if c == 0:
        a_head = ((a * cf.a_head[0] + b) / d,) + cf.a_head[1:]
        b_head = (a / d * cf.b_head[0],) + cf.b_head[1:]
        return PolyCF(a_head, cf.A, b_head, cf.B)
    a_head = (a / c, cf.a_head[0] + d / c) + cf.a_head[1:]
    b_head = (-(a * d - b * c) / (c * c),) + cf.b_head
    return PolyCF(a_head, cf.A.shift(-1), b_head, cf.B.shift(-1))


def splice_shift(m: Moebius) -> int:
    return 0 if m.c == 0 else 1


def _log(x: Fraction) -> float:
    return math.log(x.numerator) - math.log(x.denominator)


def certified_errors(cf: PolyCF, limit_iv: Interval, depths, rel: Fraction = Fraction(1, 1000)) -> dict[int, Interval]:
    """Enclosures of |value(n) - limit|; each must be known to relative width ``rel``."""
    out = {}
    vals = convergent_values(cf, max(depths))
    for n in depths:
        v = vals[n]
        if v is None:
            continue
        diff = Interval(v, v) - limit_iv
        err = Interval(diff.mig(), diff.mag())
        if err.lo == 0 or err.width > rel * err.lo:
            raise PrecisionError(f"error at depth {n} not resolved by limit interval of width {float(limit_iv.width):.3g}")
        out[n] = err
    return out


@dataclass(frozen=True)
class RateFit:
    base: float  # E in C / (E^n n^exponent)
    exponent: float
    constant: float


def estimate_rate(cf: PolyCF, limit_iv: Interval, n_lo: int, n_hi: int) -> RateFit:
    """Least-squares fit of log|err(n)| = log C - n log E - k log n over [n_lo, n_hi]."""
    errs = certified_errors(cf, limit_iv, range(n_lo, n_hi + 1))
    ns = np.array(sorted(errs), dtype=float)
    ys = np.array([_log(errs[n].mid) for n in sorted(errs)])
    design = np.column_stack([np.ones_like(ns), -ns, -np.log(ns)])
    (log_c, log_e, k), *_ = np.linalg.lstsq(design, ys, rcond=None)
    return RateFit(math.exp(log_e), float(k), math.exp(log_c))
