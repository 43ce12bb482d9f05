import itertools
from fractions import Fraction as F

import pytest

from cubicpcf.errors import DivergenceError
from cubicpcf.exact import Poly
from cubicpcf.series import (
    SeriesSpec,
    exact_rational_power,
    partial_sum,
    partial_sums,
    power_series,
    s_series,
    trinomial_series,
)

from oracles import bisect_root, gen_binom, s_term, trinomial_term


def test_s_series_first_terms():
    c = F(10)
    terms = list(itertools.islice(s_series(c).terms(), 5))
    assert terms == [1, 1 / c, 3 / c**2, 12 / c**3, 55 / c**4]


@pytest.mark.parametrize("c", [F(7), F(189), F(-54), F(6750), F(-3375, 121), F(29, 4)])
def test_s_series_closed_form(c):
    for n, t in zip(range(31), s_series(c).terms()):
        assert t == s_term(c, n)


def test_s_series_divergence():
    with pytest.raises(DivergenceError):
        s_series(F(27, 4))
    with pytest.raises(DivergenceError):
        s_series(-5)


def test_partial_sum_examples():
    assert partial_sum(s_series(7), 3) == F(425, 343)
    assert partial_sum(s_series(7), 0) == 1
    v = partial_sum(s_series(189), 40)
    assert abs(v**3 - 189 * v + 189) < F(1, 10**20)
    assert partial_sums(s_series(7), 3)[-1] == F(425, 343)
    with pytest.raises(ValueError):
        partial_sum(s_series(7), -1)


@pytest.mark.parametrize("c", [F(8), F(-8), F(54), F(-54), F(189), F(6750)])
def test_root_residual_decays_geometrically(c):
    spec = s_series(c)
    sums = partial_sums(spec, 40)
    res = [abs(v**3 - c * v + c) for v in sums]
    k = res[10] / spec.limit_ratio**10
    for n in range(10, 41):
        # the n^(-3/2) factor of the tail only helps; 4 covers the n = 10 constant
        assert res[n] <= k * spec.limit_ratio**n * 4


def test_containment_for_positive_c():
    c = F(189)
    sums = partial_sums(s_series(c), 60)
    beta = sums[-1]
    assert 0 < beta - 1 < F(27, 8) / c
    for v in sums[1:]:
        assert 1 < v < F(3, 2)
    w = partial_sum(s_series(-54), 60)
    assert abs(w**3 + 54 * w - 54) < F(1, 10**40)


def test_trinomial_k3_matches_scaled_s_terms():
    a, b = F(-7), F(3)
    spec = trinomial_series(3, a, b)
    for n, t in zip(range(20), spec.terms()):
        z = -(b * b) / a**3
        assert t == (-b / a) * F(s_term(1, n)) * z**n


def test_trinomial_k3_recovers_s_series():
    c = F(54)
    tri = trinomial_series(3, -c, c)
    for n, (t, s) in zip(range(25), zip(tri.terms(), s_series(c).terms())):
        assert t == s


@pytest.mark.parametrize("k, a, b", [(4, -5, 1), (5, 7, -2), (3, F(-9, 2), 1), (6, -11, F(1, 3))])
def test_trinomial_closed_form(k, a, b):
    for n, t in zip(range(31), trinomial_series(k, a, b).terms()):
        assert t == trinomial_term(k, a, b, n)


def test_trinomial_quartic():
    spec = trinomial_series(4, -5, 1)
    gate = F(27 * 625, 256)
    assert spec.limit_ratio == 1 / gate
    v = partial_sum(spec, 30)
    assert abs(v**4 - 5 * v + 1) < F(1, 10**15)
    lo, hi = bisect_root([1, -5, 0, 0, 1], F(2, 10), F(21, 100), F(1, 10**30))
    assert abs(v - lo) < F(1, 10**15)
    assert round(float(lo), 7) == 0.2003221


def test_trinomial_divergence():
    with pytest.raises(DivergenceError):
        trinomial_series(4, 1, 1)
    with pytest.raises(DivergenceError):
        trinomial_series(4, 0, 1)


def test_exact_powers():
    assert exact_rational_power(9, F(1, 2)) == 3
    assert exact_rational_power(F(8, 27), F(-2, 3)) == F(9, 4)
    assert exact_rational_power(2, F(1, 3)) is None


def test_power_series_forms():
    f, m, spec = power_series(2, F(1, 3), f=F(4, 5))
    assert (f, m) == (F(4, 5), 1)
    assert 2 * f**3 - 1 == F(3, 125)
    assert spec.t0 == F(5, 4)
    f, m, spec = power_series(F(1, 2), F(-1, 3), f=1)
    assert spec.limit_ratio == F(1, 2)
    assert spec.t0 == 1
    # negative z converges too
    v = partial_sum(spec, 80)
    lo, hi = bisect_root([-2, 0, 0, 1], 1, 2, F(1, 10**30))
    assert abs(v - lo) < F(1, 10**20)


def test_power_series_terms_closed_form():
    f, m, spec = power_series(5, F(2, 3), f=F(3, 5))
    z = 5 * f**3 - 1
    for n, t in zip(range(31), spec.terms()):
        assert t == f ** (-m) * gen_binom(F(2, 3), n) * z**n


def test_power_series_auto_f():
    f, m, spec = power_series(5, F(2, 3))
    assert abs(5 * f**3 - 1) < F(1, 2)
    v = partial_sum(spec, 30)
    lo, _ = bisect_root([-25, 0, 0, 1], 2, 3, F(1, 10**30))
    assert abs(v - lo) < F(1, 10**12)
    f2, _, _ = power_series(2, F(1, 3))
    assert f2 == F(3, 4)


def test_power_series_errors():
    with pytest.raises(ValueError):
        power_series(9, F(1, 2))
    with pytest.raises(DivergenceError):
        power_series(2, F(1, 3), f=2)
    with pytest.raises(ValueError):
        power_series(-2, F(1, 3))


def test_series_spec_validation():
    with pytest.raises(ValueError):
        SeriesSpec(F(1), Poly((1,)), Poly(()), F(0))
    with pytest.raises(ValueError):
        SeriesSpec(F(1), Poly((1, 1)), Poly((1,)), F(0))
