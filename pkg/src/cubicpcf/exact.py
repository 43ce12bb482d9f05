"""Exact rational and polynomial algebra.

Scalars are :class:`fractions.Fraction` throughout (exported as ``Rational``).
Polynomials are dense, immutable and stored lowest degree first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from . import kernels
from .errors import BracketError, DegreeError, SquarefreeError, ZeroPolyError

Rational = Fraction


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact scalars")
    return Fraction(x)


class Poly:
    """Dense univariate polynomial with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def from_roots(cls, roots) -> Poly:
        out = cls((1,))
        for r in roots:
            out = out * cls((-as_rational(r), 1))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # arithmetic

    @staticmethod
    def _coerce(other) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly((other,))

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            k = as_rational(other)
            return Poly(c * k for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, k):
        k = as_rational(k)
        return Poly(c / k for c in self.coeffs)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out, base = Poly((1,)), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other: Poly):
        if other.is_zero():
            raise ZeroPolyError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lc
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lc
            if c:
                quot[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __call__(self, x):
        """Horner evaluation; works for rationals, intervals and polynomials."""
        if isinstance(x, Poly):
            acc = Poly((self.lc,))
        elif isinstance(x, Interval):
            acc = Interval.point(self.lc)
        else:
            acc = self.lc
        if not self.coeffs:
            return acc
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def shift(self, k) -> Poly:
        """Return P(x + k)."""
        return self(Poly((k, 1)))

    def scale(self, k) -> Poly:
        """Return P(k x)."""
        k = as_rational(k)
        return Poly(c * k**i for i, c in enumerate(self.coeffs))

    def monic(self) -> Poly:
        if not self.coeffs:
            raise ZeroPolyError("zero polynomial has no monic form")
        return self / self.lc

    def integer_coeffs(self) -> list[int]:
        """Primitive integer coefficients of a positive multiple of P."""
        if not self.coeffs:
            return []
        den = reduce(math.lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(math.gcd, ints, 0)
        return [v // g for v in ints]

    def primitive(self) -> Poly:
        return Poly(self.integer_coeffs())

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_poly(self)


def format_poly(p: Poly, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            if mag == 1:
                body = mono
            elif mag.denominator == 1:
                body = f"{mag}{mono}"
            else:
                body = f"({mag}){mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd (the zero polynomial if both inputs are zero)."""
    while q:
        p, q = q, p % q
    return p.monic() if p else p


def is_squarefree(p: Poly) -> bool:
    return poly_gcd(p, p.derivative()).degree <= 0


def squarefree_part(p: Poly) -> Poly:
    return p // poly_gcd(p, p.derivative())


# invariants of cubics


def discriminant(p: Poly) -> Fraction:
    """Discriminant of ax^3 + bx^2 + cx + d."""
    if p.degree != 3:
        raise DegreeError(f"discriminant needs a cubic, got degree {p.degree}")
    d, c, b, a = p.coeffs
    return 18 * a * b * c * d - 4 * b**3 * d + b**2 * c**2 - 4 * a * c**3 - 27 * a**2 * d**2


def resultant(p: Poly, q: Poly, degrees: tuple[int, int] | None = None) -> Fraction:
    """Res(P, Q) = lc(P)^deg(Q) * prod Q(alpha) over the roots alpha of P.

    This is the Sylvester determinant of P and Q. ``degrees`` gives formal
    degrees (m, n) at least the actual ones, for identities that hold with
    vanishing leading coefficients. Computed by the subresultant PRS on
    primitive integer multiples.
    """
    if p.is_zero() or q.is_zero():
        raise ZeroPolyError("resultant of the zero polynomial")
    m, n = p.degree, q.degree
    fm, fn = degrees if degrees is not None else (m, n)
    if fm < m or fn < n:
        raise ValueError(f"formal degrees {(fm, fn)} below actual {(m, n)}")
    if fm > m and fn > n:
        return Fraction(0)  # first Sylvester column vanishes
    if m == 0:
        res = p.lc**n
    elif n == 0:
        res = q.lc**m
    else:
        a = Poly(p.integer_coeffs())
        b = Poly(q.integer_coeffs())
        # Res(kP, Q) = k^deg(Q) Res(P, Q)
        ka = a.lc / p.lc
        kb = b.lc / q.lc
        res = _subresultant(a, b) / (ka**n * kb**m)
    # expanding along the first column: each extra formal degree of Q gives
    # a factor lc(P), each extra formal degree of P a factor (-1)^n lc(Q)
    return res * p.lc ** (fn - n) * ((-1) ** n * q.lc) ** (fm - m)


def _subresultant(a: Poly, b: Poly) -> Fraction:
    g = h = Fraction(1)
    s = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 and b.degree % 2:
            s = -1
    while True:
        delta = a.degree - b.degree
        if a.degree % 2 and b.degree % 2:
            s = -s
        r = (a * b.lc ** (delta + 1)) % b
        a = b
        b = r / (g * h**delta)
        g = a.lc
        h = g**delta / h ** (delta - 1)
        if b.is_zero():
            return Fraction(0)
        if b.degree == 0:
            break
    h = b.lc ** a.degree / h ** (a.degree - 1)
    return s * h


# intervals


@dataclass(frozen=True)
class Interval:
    """Closed interval with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rational(self.lo))
        object.__setattr__(self, "hi", as_rational(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> Interval:
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    __contains__ = contains

    def intersects(self, other: Interval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def mag(self) -> Fraction:
        return max(abs(self.lo), abs(self.hi))

    def mig(self) -> Fraction:
        if self.lo <= 0 <= self.hi:
            return Fraction(0)
        return min(abs(self.lo), abs(self.hi))

    @staticmethod
    def _coerce(x) -> Interval:
        return x if isinstance(x, Interval) else Interval(x, x)

    def __add__(self, other):
        o = self._coerce(other)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(ps), max(ps))

    __rmul__ = __mul__

    def reciprocal(self) -> Interval:
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError(f"interval {self} contains zero")
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        return self * self._coerce(other).reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.reciprocal()

    def __pow__(self, e: int):
        out = Interval(1, 1)
        for _ in range(e):
            out = out * self
        return out

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


# real roots


def sign_at(p: Poly, x) -> int:
    x = as_rational(x)
    return kernels.poly_sign(p.integer_coeffs(), x.numerator, x.denominator)


def sturm_sequence(p: Poly) -> list[Poly]:
    """Sturm chain of P with every member scaled to a primitive integer form."""
    seq = [p.primitive(), p.derivative().primitive()]
    while True:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append((-r).primitive())
    return seq


def _cauchy_bound(p: Poly) -> Fraction:
    lc = abs(p.lc)
    return 1 + max(abs(c) / lc for c in p.coeffs[:-1])


def isolate_real_roots(p: Poly, width=None) -> list[Interval]:
    """Disjoint isolating intervals for every real root, in ascending order.

    Each interval has non-root endpoints, so the sign change is strict.
    With ``width``, intervals are split further until no wider than that.
    """
    width = None if width is None else as_rational(width)
    if p.is_zero():
        raise ZeroPolyError("zero polynomial has no isolated roots")
    if p.degree <= 0:
        return []
    if not is_squarefree(p):
        raise SquarefreeError(f"{p} is not squarefree")
    chain = [q.integer_coeffs() for q in sturm_sequence(p)]
    coeffs = chain[0]

    def var(x: Fraction) -> int:
        return kernels.sign_variations(chain, x.numerator, x.denominator)

    bound = _cauchy_bound(p)
    out: list[Interval] = []

    # roots in the open interval (lo, hi); neither endpoint is a root
    def rec(lo, vlo, hi, vhi):
        k = vlo - vhi
        if k == 0:
            return
        if k == 1 and (width is None or hi - lo <= width):
            out.append(Interval(lo, hi))
            return
        mid = (lo + hi) / 2
        while kernels.poly_sign(coeffs, mid.numerator, mid.denominator) == 0:
            mid = (lo + mid) / 2
        vmid = var(mid)
        rec(lo, vlo, mid, vmid)
        rec(mid, vmid, hi, vhi)

    rec(-bound, var(-bound), bound, var(bound))
    # neighbours may share a (non-root) endpoint; shrink them apart
    for i in range(len(out) - 1):
        while out[i].hi >= out[i + 1].lo:
            out[i] = refine_root(p, out[i], out[i].width / 2)
            out[i + 1] = refine_root(p, out[i + 1], out[i + 1].width / 2)
    return out


def count_roots(p: Poly, iv: Interval) -> int:
    """Number of distinct real roots of squarefree P in the closed interval."""
    chain = [q.integer_coeffs() for q in sturm_sequence(p)]
    lo, hi = iv.lo, iv.hi
    n = kernels.sign_variations(chain, lo.numerator, lo.denominator) - kernels.sign_variations(
        chain, hi.numerator, hi.denominator
    )
    # V(lo) - V(hi) counts (lo, hi]
    return n + (sign_at(p, lo) == 0)


def refine_root(p: Poly, iv: Interval, eps) -> Interval:
    """Bisect an isolating interval down to width <= eps, rational endpoints."""
    eps = as_rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    coeffs = p.integer_coeffs()
    lo, hi = iv.lo, iv.hi
    s_lo = kernels.poly_sign(coeffs, lo.numerator, lo.denominator)
    s_hi = kernels.poly_sign(coeffs, hi.numerator, hi.denominator)
    if s_lo == 0:
        return Interval(lo, lo)
    if s_hi == 0:
        return Interval(hi, hi)
    if s_lo == s_hi:
        raise BracketError(f"{p} has no sign change on {iv}")
    width = hi - lo
    if width <= eps:
        return iv
    ratio = width / eps
    steps = max(ratio.numerator.bit_length() - ratio.denominator.bit_length() - 1, 0)
    while Fraction(1 << steps) < ratio:
        steps += 1
    den = math.lcm(lo.denominator, hi.denominator)
    lo_n = lo.numerator * (den // lo.denominator)
    hi_n = hi.numerator * (den // hi.denominator)
    lo_n, hi_n, den = kernels.bisect(coeffs, lo_n, hi_n, den, steps)
    return Interval(Fraction(lo_n, den), Fraction(hi_n, den))


def rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots of P, ascending."""
    if p.is_zero():
        raise ZeroPolyError("zero polynomial")
    if p.degree <= 0:
        return []
    sq = squarefree_part(p)
    c = sq.integer_coeffs()
    n = len(c) - 1
    lead = c[-1]
    # lead^(n-1) * P(y / lead) is monic with integer coefficients in y
    monic_int = Poly([c[i] * lead ** (n - 1 - i) for i in range(n)] + [1])
    roots = []
    for iv in isolate_real_roots(monic_int):
        iv = refine_root(monic_int, iv, Fraction(1, 2))
        for y in range(math.ceil(iv.lo), math.floor(iv.hi) + 1):
            if monic_int(Fraction(y)) == 0:
                roots.append(Fraction(y, lead))
    return sorted(set(roots))


def is_irreducible_cubic(p: Poly) -> bool:
    return p.degree == 3 and not rational_roots(p)
