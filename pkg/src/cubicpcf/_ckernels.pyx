# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels; behaviour identical to ``_pykernels``."""


def cf_recurrence(list a, list b):
    cdef Py_ssize_t k, n = len(a)
    cdef object p_prev = 1, p = a[0], q_prev = 0, q = 1, ak, bk, t
    cdef list ps = [p], qs = [q]
    for k in range(1, n):
        ak = a[k]
        bk = b[k - 1]
        t = ak * p + bk * p_prev
        p_prev = p
        p = t
        t = ak * q + bk * q_prev
        q_prev = q
        q = t
        ps.append(p)
        qs.append(q)
    return ps, qs


def cf_final(list a, list b):
    cdef Py_ssize_t k, n = len(a)
    cdef object p_prev = 1, p = a[0], q_prev = 0, q = 1, ak, bk, t
    for k in range(1, n):
        ak = a[k]
        bk = b[k - 1]
        t = ak * p + bk * p_prev
        p_prev = p
        p = t
        t = ak * q + bk * q_prev
        q_prev = q
        q = t
    return p, q


cdef int _sign(list coeffs, object num, object den):
    cdef Py_ssize_t i, n = len(coeffs) - 1
    cdef object acc, dpow = 1
    if n < 0:
        return 0
    acc = coeffs[n]
    for i in range(n - 1, -1, -1):
        dpow = dpow * den
        acc = acc * num + coeffs[i] * dpow
    if acc > 0:
        return 1
    if acc < 0:
        return -1
    return 0


def poly_sign(list coeffs, num, den):
    return _sign(coeffs, num, den)


def sign_variations(list polys, num, den):
    cdef int count = 0, last = 0, s
    cdef list coeffs
    for coeffs in polys:
        s = _sign(coeffs, num, den)
        if s == 0:
            continue
        if last != 0 and s != last:
            count += 1
        last = s
    return count


def bisect(list coeffs, lo_n, hi_n, den, Py_ssize_t steps):
    cdef Py_ssize_t i
    cdef int s, s_lo = _sign(coeffs, lo_n, den)
    cdef object mid
    for i in range(steps):
        lo_n = lo_n << 1
        hi_n = hi_n << 1
        den = den << 1
        mid = (lo_n + hi_n) >> 1
        s = _sign(coeffs, mid, den)
        if s == 0:
            return mid, mid, den
        if s == s_lo:
            lo_n = mid
        else:
            hi_n = mid
    return lo_n, hi_n, den
