"""Pure-Python integer kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors every
function here line for line and must return identical results.
"""


def cf_recurrence(a, b):
    """Numerators and denominators of every convergent of an integer CF.

    ``a`` holds a(0..N) and ``b`` holds b(0..N-1).
    """
    p_prev, p = 1, a[0]
    q_prev, q = 0, 1
    ps = [p]
    qs = [q]
    for k in range(1, len(a)):
        ak = a[k]
        bk = b[k - 1]
        p_prev, p = p, ak * p + bk * p_prev
        q_prev, q = q, ak * q + bk * q_prev
        ps.append(p)
        qs.append(q)
    return ps, qs


def cf_final(a, b):
    p_prev, p = 1, a[0]
    q_prev, q = 0, 1
    for k in range(1, len(a)):
        ak = a[k]
        bk = b[k - 1]
        p_prev, p = p, ak * p + bk * p_prev
        q_prev, q = q, ak * q + bk * q_prev
    return p, q


def poly_sign(coeffs, num, den):
    """Sign of sum(coeffs[i] * x**i) at x = num/den, with den > 0."""
    n = len(coeffs) - 1
    if n < 0:
        return 0
    acc = coeffs[n]
    dpow = 1
    for i in range(n - 1, -1, -1):
        dpow *= den
        acc = acc * num + coeffs[i] * dpow
    return (acc > 0) - (acc < 0)


def sign_variations(polys, num, den):
    count = 0
    last = 0
    for coeffs in polys:
        s = poly_sign(coeffs, num, den)
        if s == 0:
            continue
        if last != 0 and s != last:
            count += 1
        last = s
    return count


def bisect(coeffs, lo_n, hi_n, den, steps):
    """Halve [lo_n/den, hi_n/den] ``steps`` times around a sign change.

    Returns the new ``(lo_n, hi_n, den)``; a hit on an exact root returns a
    degenerate interval immediately.
    """
    s_lo = poly_sign(coeffs, lo_n, den)
    for _ in range(steps):
        lo_n <<= 1
        hi_n <<= 1
        den <<= 1
        mid = (lo_n + hi_n) >> 1
        s = poly_sign(coeffs, mid, den)
        if s == 0:
            return mid, mid, den
        if s == s_lo:
            lo_n = mid
        else:
            hi_n = mid
    return lo_n, hi_n, den
