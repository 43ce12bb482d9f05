import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicpcf.errors import DegreeError, RatioUndefinedError, ReducibleError
from cubicpcf.exact import Interval, Poly, discriminant, isolate_real_roots, refine_root, resultant
from cubicpcf.field import FieldElem, elem_charpoly
from cubicpcf.transform import (
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

from oracles import bisect_all, random_irreducible_cubic


@pytest.mark.parametrize(
    "coeffs, expected",
    [((1, 2, 1, 1), F(500, 121)), ((1, 1, 0, 1), F(4, 27)), ((-1, -3, 1, 1), F(-1000)), ((189, -189, 0, 1), F(-28))],
)
def test_ratio_examples(coeffs, expected):
    assert ratio(Poly(coeffs)) == expected


def test_ratio_errors():
    with pytest.raises(RatioUndefinedError):
        ratio(Poly((0, 1, 0, 1)))
    with pytest.raises(DegreeError):
        ratio(Poly((1, 1)))
    assert ratio(Poly((-2, 0, 0, 1))) == 0


def test_depress_example():
    p = Poly((1, 2, 1, 1))
    q, m = depress(p)
    assert q == Poly((F(11, 27), F(5, 3), 0, 1))
    assert ratio(q) == F(500, 121)
    (iv,) = isolate_real_roots(q)
    root = refine_root(q, iv, F(1, 10**30))
    image = m(root)
    (piv,) = isolate_real_roots(p)
    assert image.intersects(refine_root(p, piv, F(1, 10**30)))
    already = Poly((3, 2, 0, 1))
    q2, m2 = depress(already)
    assert q2 == already and m2(F(5)) == 5


def test_boost_polys_disc_minus31():
    # alpha = -beta is a root of x^3 + x - 1
    e, f = boost_polys(1, -1)
    assert e(F(-1)) == F(11, 3) and f(F(-1)) == F(-47, 27)
    assert 4 * e(F(-1)) ** 3 / (27 * f(F(-1)) ** 2) == F(5324, 2209)
    d, q, g = boost_ratio(Poly((-1, 1, 0, 1)), F(5324, 2209))
    assert abs(ratio(q)) >= F(5324, 2209) and elem_charpoly(g) == q


def test_boost_cbrt2_field():
    e, f = boost_polys(-6, 6)
    r = 4 * e(F(3, 2)) ** 3 / (27 * f(F(3, 2)) ** 2)
    assert r == 8 and r > 1
    d, q, _ = boost_ratio(Poly((6, -6, 0, 1)), F(101, 100))
    assert abs(ratio(q)) >= F(101, 100)


def test_boost_reaches_large_target():
    p = Poly((F(11, 27), F(5, 3), 0, 1))
    d, q, g = boost_ratio(p, 10**6)
    assert abs(ratio(q)) >= 10**6
    assert ratio(elem_charpoly(g)) == ratio(q)


def test_boost_resultant_identity_small():
    rng = random.Random(5)
    for _ in range(10):
        a, b = F(rng.randint(-20, 20), rng.randint(1, 5)), F(rng.randint(-20, 20), rng.randint(1, 5))
        e, f = boost_polys(a, b)
        p = Poly((b, a, 0, 1))
        if not e or not f:
            continue
        assert resultant(e, f, (2, 3)) == -discriminant(p) ** 3 / 729
    # b = 0 drops deg f to 2; the identity needs the formal degree 3
    e, f = boost_polys(F(1, 6), 0)
    assert f.degree == 2 and resultant(e, f) != resultant(e, f, (2, 3)) == -discriminant(Poly((0, F(1, 6), 0, 1))) ** 3 / 729


@pytest.mark.parametrize(
    "coeffs, c",
    [((1, 2, 1, 1), F(-3375, 121)), ((-1, -3, 1, 1), F(6750)), ((1, -2, -1, 1), F(189))],
)
def test_normalize_examples(coeffs, c):
    p = Poly(coeffs)
    got, m = normalize_c(p)
    assert got == c
    v = m(FieldElem.theta(p))
    assert elem_charpoly(v) == c_poly(c)
    assert abs(got) == CRITICAL_C * abs(ratio(p))


def test_normalize_cyclic_matrix():
    _, m = normalize_c(Poly((1, -2, -1, 1)))
    assert m.inverse().equivalent(type(m)(F(1, 9), F(1, 3), 0, 1))


def test_normalize_requires_ratio():
    with pytest.raises(RatioUndefinedError):
        normalize_c(Poly((-2, 0, 0, 1)))


def test_normalize_magnitude_law_random():
    rng = random.Random(21)
    for _ in range(100):
        p = Poly(random_irreducible_cubic(rng))
        try:
            c, _ = normalize_c(p)
        except RatioUndefinedError:
            continue
        assert abs(c) == CRITICAL_C * abs(ratio(p))


def test_classify_examples():
    p = c_poly(189)
    roots = isolate_real_roots(p)
    labels = [classify_root(189, iv) for iv in roots]
    assert labels == [RootLabel.BETA1, RootLabel.BETA2, RootLabel.BETA3]
    oracle = bisect_all([189, -189, 0, 1], -20, 20, F(1, 10**6))
    assert [round(float(lo), 4) for lo, _ in oracle] == [-14.2228, 1.0054, 13.2174]
    for iv, (lo, hi) in zip(roots, oracle):
        assert iv.lo <= lo and hi <= iv.hi
    (iv,) = isolate_real_roots(c_poly(-54))
    assert classify_root(-54, iv) is RootLabel.UNIQUE_REAL
    c = CRITICAL_C + 1
    low = isolate_real_roots(c_poly(c))[0]
    assert classify_root(c, low) is RootLabel.BETA1
    with pytest.raises(ValueError):
        classify_root(6, low)


def test_classify_near_critical():
    c = CRITICAL_C + F(1, 10**8)
    labels = [classify_root(c, iv) for iv in isolate_real_roots(c_poly(c))]
    assert labels == [RootLabel.BETA1, RootLabel.BETA2, RootLabel.BETA3]


def test_phi_step_examples():
    big, _ = phi_step(6750)
    assert big == F(1687500, 249001)
    big1, _ = phi_step(big)
    assert big1 == F(105468750000, 15376248001)
    c10, perm = phi_step(10)
    assert c10 == F(2700, 49)
    assert perm == {RootLabel.BETA1: RootLabel.BETA1, RootLabel.BETA2: RootLabel.BETA3, RootLabel.BETA3: RootLabel.BETA2}
    with pytest.raises(ReducibleError):
        phi_step(REDUCIBLE_C)
    with pytest.raises(ValueError):
        phi_step(5)


def _check_perm(c):
    big, perm = phi_step(c)
    phi = phi_moebius(c)
    src = isolate_real_roots(c_poly(c))
    dst = {classify_root(big, iv): refine_root(c_poly(big), iv, F(1, 10**20)) for iv in isolate_real_roots(c_poly(big))}
    for iv in src:
        label = classify_root(c, iv)
        image = phi(refine_root(c_poly(c), iv, F(1, 10**40)))
        target = dst[perm[label]]
        assert image.intersects(target)
        assert image.width < F(1, 10**20)


@pytest.mark.parametrize("c", [F(10), F(189), F(6750), F(29, 2), F(27, 4) + F(1, 100), F(1687500, 249001)])
def test_phi_permutation_by_interval_images(c):
    _check_perm(c)


@settings(max_examples=80, deadline=None)
@given(st.fractions(min_value=F(27, 4), max_value=10**6, max_denominator=50))
def test_phi_growth_law(c):
    # C > c holds exactly on (27/4, 27); c = 27 is fixed and C < c beyond it
    if c in (CRITICAL_C, REDUCIBLE_C):
        return
    big, _ = phi_step(c)
    assert big > CRITICAL_C
    assert (big > c) == (c < 27)
    assert (big == c) == (c == 27)


def test_phi_chain_from_6750_decreases():
    big, _ = phi_step(6750)
    assert big < 6750 and big > CRITICAL_C


def test_phi_charpoly():
    for c in (F(10), F(189), F(6750)):
        s = FieldElem.theta(c_poly(c))
        big, _ = phi_step(c)
        assert elem_charpoly(phi_moebius(c)(s)) == c_poly(big)


@settings(max_examples=30, deadline=None)
@given(
    st.fractions(min_value=-9, max_value=9, max_denominator=5).filter(bool),
    st.fractions(min_value=-9, max_value=9, max_denominator=5),
)
def test_ratio_affine_invariance_property(scale, shift):
    p = Poly((1, 2, 1, 1))
    u = FieldElem.theta(p) * scale + shift
    assert ratio(elem_charpoly(u)) == ratio(p)


def test_interval_cut_points():
    iv = isolate_real_roots(c_poly(7))
    assert len(iv) == 3 and all(isinstance(x, Interval) for x in iv)
