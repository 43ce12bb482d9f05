import random

import pytest

from cubicpcf import _pykernels as py
from cubicpcf import kernels

ck = pytest.importorskip("cubicpcf._ckernels")


def _rand_cf(rng, n):
    a = [rng.randint(-10**6, 10**6) for _ in range(n + 1)]
    b = [rng.choice([-1, 1]) * rng.randint(1, 10**8) for _ in range(n)]
    return a, b


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("seed", range(5))
def test_cf_kernels_agree(seed):
    rng = random.Random(seed)
    a, b = _rand_cf(rng, rng.randint(0, 200))
    assert ck.cf_recurrence(a, b) == py.cf_recurrence(a, b)
    assert ck.cf_final(a, b) == py.cf_final(a, b)
    assert py.cf_final(a, b) == tuple(x[-1] for x in py.cf_recurrence(a, b))


def test_cf_hand_values():
    # 1 + 6/(42 - 2520/(200 - 23520/462))
    assert py.cf_final([1, 42, 200, 462], [6, -2520, -23520]) == ck.cf_final([1, 42, 200, 462], [6, -2520, -23520])
    p, q = py.cf_final([1, 42, 200, 462], [6, -2520, -23520])
    assert p * 343 == 425 * q


@pytest.mark.parametrize("seed", range(5))
def test_sign_kernels_agree(seed):
    rng = random.Random(100 + seed)
    polys = [[rng.randint(-50, 50) for _ in range(rng.randint(1, 6))] for _ in range(4)]
    for _ in range(50):
        num, den = rng.randint(-10**9, 10**9), rng.randint(1, 10**9)
        for p in polys:
            assert ck.poly_sign(p, num, den) == py.poly_sign(p, num, den)
        assert ck.sign_variations(polys, num, den) == py.sign_variations(polys, num, den)
    assert ck.poly_sign([], 1, 1) == py.poly_sign([], 1, 1) == 0


def test_bisect_agrees_and_brackets():
    coeffs = [-2, 0, 0, 1]
    got = ck.bisect(coeffs, 1, 2, 1, 100)
    assert got == py.bisect(coeffs, 1, 2, 1, 100)
    lo, hi, den = got
    assert hi - lo == 1 and den == 2**100
    assert py.poly_sign(coeffs, lo, den) < 0 < py.poly_sign(coeffs, hi, den)
    # an exact dyadic root stops the loop
    assert ck.bisect([-1, 2], 0, 1, 1, 10) == py.bisect([-1, 2], 0, 1, 1, 10) == (1, 1, 2)
