# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the pure-Python kernels in _kernels.py.

Coefficients stay arbitrary Python objects (int, Fraction,
GaussianRational, ZPoly); the win comes from removing interpreter loop
overhead around the ring operations.
"""

BACKEND = "cython"


def conv_trunc(list a, list b, Py_ssize_t keep):
    """Truncated convolution: out[k] = sum a[i]*b[k-i] for k < keep."""
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t n, i, j, jmax
    if la == 0 or lb == 0:
        return []
    n = la + lb - 1
    if keep < n:
        n = keep
    if n <= 0:
        return []
    cdef list out = [0] * n
    cdef object ai, bj
    for i in range(min(la, n)):
        ai = a[i]
        if not ai:
            continue
        jmax = lb
        if n - i < jmax:
            jmax = n - i
        for j in range(jmax):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def inv_unit(list g, Py_ssize_t keep, object one):
    """Inverse of a series with g[0] == 1, to keep coefficients."""
    cdef list out = [0] * keep
    cdef Py_ssize_t lg = len(g), k, i, imax
    cdef object acc, gi
    if keep <= 0:
        return out
    out[0] = one
    for k in range(1, keep):
        acc = 0
        imax = k if k < lg - 1 else lg - 1
        for i in range(1, imax + 1):
            gi = g[i]
            if gi:
                acc = acc + gi * out[k - i]
        out[k] = -acc if acc else 0
    return out


def mul_linear(list f, object c, Py_ssize_t d):
    """Multiply in place by (1 - c*q^d) with d >= 1."""
    cdef Py_ssize_t i
    cdef object t
    for i in range(len(f) - 1, d - 1, -1):
        t = f[i - d]
        if t:
            f[i] = f[i] - c * t
    return f


def div_linear(list f, object c, Py_ssize_t d):
    """Divide in place by (1 - c*q^d) with d >= 1."""
    cdef Py_ssize_t i, n = len(f)
    cdef object t
    for i in range(d, n):
        t = f[i - d]
        if t:
            f[i] = f[i] + c * t
    return f
