"""Arithmetic in a cubic field Q[x]/(P), Moebius maps, real embeddings."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from .errors import DegreeError, PoleError, RationalElementError, ReducibleError
from .exact import Interval, Poly, as_rational, is_irreducible_cubic, refine_root, resultant


@lru_cache(maxsize=256)
def _checked_minpoly(coeffs: tuple) -> Poly:
    p = Poly(coeffs)
    if p.degree != 3 or p.lc != 1:
        raise DegreeError(f"minimal polynomial must be a monic cubic, got {p}")
    if not is_irreducible_cubic(p):
        raise ReducibleError(f"{p} has a rational root")
    return p


def _ext_inverse(r: Poly, m: Poly) -> Poly:
    """s with s*r = 1 mod m, for r coprime to m."""
    r0, r1 = m, r
    s0, s1 = Poly(), Poly((1,))
    while r1.degree > 0:
        q, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - q * s1
    if r1.is_zero():
        raise ZeroDivisionError("element is not invertible")
    return s1 / r1.lc


class FieldElem:
    """Element of Q[theta]/(minpoly), stored as a residue of degree <= 2."""

    __slots__ = ("residue", "minpoly")

    def __init__(self, residue, minpoly: Poly):
        self.minpoly = _checked_minpoly(minpoly.coeffs)
        if not isinstance(residue, Poly):
            residue = Poly((residue,))
        self.residue = residue % self.minpoly

    @classmethod
    def theta(cls, minpoly: Poly) -> FieldElem:
        return cls(Poly.x(), minpoly)

    def coords(self) -> list[Fraction]:
        return [self.residue[i] for i in range(3)]

    def is_rational(self) -> bool:
        return self.residue.degree <= 0

    def _lift(self, other) -> Poly:
        if isinstance(other, FieldElem):
            if other.minpoly != self.minpoly:
                raise ValueError("elements of different fields")
            return other.residue
        return Poly((as_rational(other),))

    def __add__(self, other):
        return FieldElem(self.residue + self._lift(other), self.minpoly)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(-self.residue, self.minpoly)

    def __sub__(self, other):
        return FieldElem(self.residue - self._lift(other), self.minpoly)

    def __rsub__(self, other):
        return FieldElem(self._lift(other) - self.residue, self.minpoly)

    def __mul__(self, other):
        return FieldElem(self.residue * self._lift(other), self.minpoly)

    __rmul__ = __mul__

    def inverse(self) -> FieldElem:
        if self.residue.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return FieldElem(_ext_inverse(self.residue, self.minpoly), self.minpoly)

    def __truediv__(self, other):
        if isinstance(other, FieldElem):
            return self * other.inverse()
        return FieldElem(self.residue / as_rational(other), self.minpoly)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = FieldElem(Poly((1,)), self.minpoly)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.minpoly == other.minpoly and self.residue == other.residue
        if isinstance(other, (int, Fraction)):
            return self.residue == Poly((other,))
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.minpoly))

    def __repr__(self):
        return f"FieldElem({self.residue.__str__().replace('x', 't')} mod {self.minpoly})"


def elem_charpoly(g: FieldElem) -> Poly:
    """Characteristic polynomial of g, as Res_y(minpoly(y), x - g(y)).

    The resultant is a monic cubic in x; it is sampled at x = 0..3 and
    interpolated.
    """
    xs = [Fraction(k) for k in range(4)]
    ys = []
    for k in xs:
        h = Poly((k,)) - g.residue
        ys.append(Fraction(0) if h.is_zero() else resultant(g.minpoly, h))
    out = Poly()
    for i, xi in enumerate(xs):
        basis = Poly((1,))
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Poly((-xj, 1))
                denom *= xi - xj
        out = out + basis * (ys[i] / denom)
    assert out.degree == 3 and out.lc == 1, out
    return out


@dataclass(frozen=True)
class Moebius:
    """Invertible 2x2 rational matrix acting by x -> (a x + b) / (c x + d)."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.det == 0:
            raise ValueError(f"singular matrix {self.entries()}")

    @classmethod
    def identity(cls) -> Moebius:
        return cls(1, 0, 0, 1)

    @classmethod
    def affine(cls, scale, shift) -> Moebius:
        """x -> scale*x + shift."""
        return cls(scale, shift, 0, 1)

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: Moebius) -> Moebius:
        """Composition: (self @ other)(x) = self(other(x))."""
        return Moebius(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> Moebius:
        return Moebius(self.d, -self.b, -self.c, self.a)

    def pole(self) -> Fraction | None:
        return None if self.c == 0 else -self.d / self.c

    def __call__(self, x):
        if isinstance(x, FieldElem):
            return (x * self.a + self.b) / (x * self.c + self.d)
        if isinstance(x, Interval):
            p = self.pole()
            if p is not None and x.contains(p):
                raise PoleError(f"interval {x} contains the pole {p}")
            ends = [self(x.lo), self(x.hi)]
            return Interval(min(ends), max(ends))
        x = as_rational(x)
        den = self.c * x + self.d
        if den == 0:
            raise PoleError(f"{x} is the pole of {self}")
        return (self.a * x + self.b) / den

    def canonical(self) -> Moebius:
        """Scalar multiple with coprime integer entries, first nonzero positive."""
        ents = self.entries()
        den = reduce(math.lcm, (e.denominator for e in ents), 1)
        ints = [int(e * den) for e in ents]
        g = reduce(math.gcd, ints, 0)
        ints = [v // g for v in ints]
        if next(v for v in ints if v) < 0:
            ints = [-v for v in ints]
        return Moebius(*ints)

    def equivalent(self, other: Moebius) -> bool:
        return self.canonical() == other.canonical()

    def __str__(self):
        return "[[{}, {}], [{}, {}]]".format(*self.entries())


def _kernel(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel by exact Gauss-Jordan elimination."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][col]
        m[r] = [v / pv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -m[i][fc]
        basis.append(vec)
    return basis


def moebius_relate(u: FieldElem, v: FieldElem) -> Moebius:
    """M with v = M(u) in K, from a linear relation among uv, v, u, 1."""
    if u.is_rational() or v.is_rational():
        raise RationalElementError("both elements must be irrational")
    cols = [(u * v).coords(), v.coords(), u.coords(), [Fraction(1), Fraction(0), Fraction(0)]]
    rows = [[cols[j][i] for j in range(4)] for i in range(3)]
    basis = _kernel(rows, 4)
    candidates = list(basis)
    if len(basis) > 1:
        candidates += [[x + y for x, y in zip(basis[0], b)] for b in basis[1:]]
    for k in candidates:
        c, d, a, b = k[0], k[1], -k[2], -k[3]
        if a * d - b * c == 0:
            continue
        den = u * c + d
        if den == 0:
            continue
        m = Moebius(a, b, c, d).canonical()
        assert m(u) == v
        return m
    raise RationalElementError("no invertible relation found")  # unreachable for v not in Q


def embed(g: FieldElem, root_iv: Interval, eps) -> Interval:
    """Enclosure of width <= eps of g under theta -> the root isolated by root_iv."""
    eps = as_rational(eps)
    if g.is_rational():
        return Interval.point(g.residue[0])
    slope = g.residue.derivative()(root_iv).mag() + 1
    step = eps / (2 * slope)
    theta = root_iv
    while True:
        theta = refine_root(g.minpoly, theta, min(step, theta.width) if theta.width else step)
        out = g.residue(theta)
        if out.width <= eps:
            return out
        step /= 4
