"""Hypergeometric series with polynomial term ratios.

Every series is a bare sum of terms t_n with t_{n+1} = t_n * N(n) / Dn(n);
prefactors are folded into t_0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import DivergenceError
from .exact import Poly, as_rational
from .transform import CRITICAL_C


@dataclass(frozen=True)
class SeriesSpec:
    t0: Fraction
    ratio_num: Poly
    ratio_den: Poly
    limit_ratio: Fraction

    def __post_init__(self):
        if self.ratio_den.is_zero():
            raise ValueError("zero term-ratio denominator")
        if self.ratio_num.degree != self.ratio_den.degree:
            raise ValueError("term-ratio numerator and denominator must have equal degree")

    def term_ratio(self, n: int) -> Fraction:
        return self.ratio_num(Fraction(n)) / self.ratio_den(Fraction(n))

    def terms(self) -> Iterator[Fraction]:
        t = self.t0
        n = 0
        while True:
            yield t
            t = t * self.term_ratio(n)
            n += 1


def partial_sum(spec: SeriesSpec, n: int) -> Fraction:
    """Exact sum of t_0 .. t_n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    total = Fraction(0)
    for k, t in enumerate(spec.terms()):
        total += t
        if k == n:
            return total
    raise AssertionError  # pragma: no cover


def partial_sums(spec: SeriesSpec, n: int) -> list[Fraction]:
    out = []
    total = Fraction(0)
    for k, t in enumerate(spec.terms()):
        total += t
        out.append(total)
        if k == n:
            return out
    raise AssertionError  # pragma: no cover


def s_series(c) -> SeriesSpec:
    """S(c) = sum binom(3n, n) / (2n + 1) * c^-n, a root of x^3 - c x + c."""
    c = as_rational(c)
    if abs(c) <= CRITICAL_C:
        raise DivergenceError(f"S(c) diverges for |c| <= 27/4, got c = {c}")
    num = Poly((6, 27, 27))  # 3(3n+1)(3n+2)
    den = Poly((6, 10, 4)) * c  # 2(n+1)(2n+3) c
    return SeriesSpec(Fraction(1), num, den, Fraction(27, 4) / abs(c))


def trinomial_series(k: int, a, b) -> SeriesSpec:
    """Root of x^k + a x + b as (-b/a) sum binom(kn, n) / ((k-1)n + 1) z^n.

    Here z = (-1)^k b^(k-1) / a^k.
    """
    a, b = as_rational(a), as_rational(b)
    if k < 2:
        raise ValueError("k must be >= 2")
    if a == 0 or b == 0:
        raise DivergenceError("trinomial series needs a != 0 and b != 0")
    gate = abs(Fraction((k - 1) ** (k - 1)) * a**k / (k**k * b ** (k - 1)))
    if gate <= 1:
        raise DivergenceError(f"|(k-1)^(k-1) a^k / (k^k b^(k-1))| = {gate} <= 1")
    z = (-1) ** k * b ** (k - 1) / a**k
    num = Poly((1,))
    for j in range(1, k + 1):
        num = num * Poly((j, k))
    den = Poly((1, 1))
    for j in range(2, k + 1):
        den = den * Poly((j, k - 1))
    return SeriesSpec(-b / a, num * z, den, 1 / gate)


def _iroot(n: int, d: int) -> int | None:
    """Exact integer d-th root of n >= 0, or None."""
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + d - 1) // d)
    while True:
        y = ((d - 1) * x + n // x ** (d - 1)) // d
        if y >= x:
            break
        x = y
    return x if x**d == n else None


def exact_rational_power(u, exponent) -> Fraction | None:
    """u^exponent when it is rational, else None."""
    u, e = as_rational(u), as_rational(exponent)
    if u <= 0:
        raise ValueError("base must be positive")
    m, d = e.numerator, e.denominator
    rn, rd = _iroot(u.numerator, d), _iroot(u.denominator, d)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd) ** m


def _binomial_spec(prefactor: Fraction, m: int, d: int, z: Fraction) -> SeriesSpec:
    # binom(m/d, n+1) / binom(m/d, n) * z = (m - d n) z / (d (n + 1))
    num = Poly((m, -d)) * z.numerator
    den = Poly((d, d)) * z.denominator
    return SeriesSpec(prefactor, num, den, abs(z))


def power_series(u, exponent, f=None, tighten: bool = True) -> tuple[Fraction, int, SeriesSpec]:
    """u^(m/d) = f^-m * sum binom(m/d, n) z^n with z = u f^d - 1.

    ``f`` approximates u^(-1/d); when omitted it is found as a dyadic
    bisection point with |z| < 1 (or < 1/2 with ``tighten``).
    """
    u, e = as_rational(u), as_rational(exponent)
    if u <= 0:
        raise ValueError("base must be positive")
    m, d = e.numerator, e.denominator
    if exact_rational_power(u, Fraction(1, d)) is not None:
        raise ValueError(f"{u}^(1/{d}) is rational; use exact_rational_power")
    if f is None:
        f = _find_f(u, d, Fraction(1, 2) if tighten else Fraction(1))
    f = as_rational(f)
    z = u * f**d - 1
    if not abs(z) < 1:
        raise DivergenceError(f"|z| = |{z}| >= 1 for f = {f}")
    return f, m, _binomial_spec(f ** (-m), m, d, z)


def _find_f(u: Fraction, d: int, bound: Fraction) -> Fraction:
    # u x^d - 1 is increasing on x > 0; bracket its root, then bisect
    lo, hi = Fraction(0), Fraction(1)
    while u * hi**d < 1:
        hi *= 2
    while True:
        mid = (lo + hi) / 2
        z = u * mid**d - 1
        if abs(z) < bound:
            return mid
        if z < 0:
            lo = mid
        else:
            hi = mid
