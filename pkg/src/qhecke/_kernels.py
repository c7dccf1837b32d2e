"""Pure-Python hot kernels for dense truncated series arithmetic.

A compiled twin lives in _speedups.pyx; qhecke.kernels picks whichever is
available.  All functions work on plain lists of ring elements (ints,
Fractions, GaussianRationals or ZPolys) and rely only on + - *.
"""

BACKEND = "python"


def conv_trunc(a, b, keep):
    """Truncated convolution: out[k] = sum a[i]*b[k-i] for k < keep."""
    la, lb = len(a), len(b)
    n = min(keep, la + lb - 1) if la and lb else 0
    if n <= 0:
        return []
    out = [0] * n
    for i in range(min(la, n)):
        ai = a[i]
        if not ai:
            continue
        jmax = min(lb, n - i)
        for j in range(jmax):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def inv_unit(g, keep, one):
    """Inverse of a series with g[0] == 1, to keep coefficients.

    ``one`` is the ring's multiplicative identity (used to seed out[0]).
    """
    out = [0] * keep
    if keep <= 0:
        return out
    out[0] = one
    lg = len(g)
    for k in range(1, keep):
        acc = 0
        for i in range(1, min(k, lg - 1) + 1):
            gi = g[i]
            if gi:
                acc = acc + gi * out[k - i]
        out[k] = -acc if acc else 0
    return out


def mul_linear(f, c, d):
    """Multiply in place by (1 - c*q^d) with d >= 1: f[i] -= c*f[i-d]."""
    for i in range(len(f) - 1, d - 1, -1):
        t = f[i - d]
        if t:
            f[i] = f[i] - c * t
    return f


def div_linear(f, c, d):
    """Divide in place by (1 - c*q^d) with d >= 1: f[i] += c*f[i-d]."""
    for i in range(d, len(f)):
        t = f[i - d]
        if t:
            f[i] = f[i] + c * t
    return f
