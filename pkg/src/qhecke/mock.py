"""Eulerian mock theta series, bivariate F4/F8, and the generic
Hecke-Rogers and Appell-type sum evaluators.

The four Eulerian series

    A(q)    = sum q^{(n+1)^2} (-q;q^2)_n   / (q;q^2)_{n+1}^2
    V1(q)   = sum q^{(n+1)^2} (-q;q^2)_n   / (q;q^2)_{n+1}
    sigma(q)= sum q^{(n+1)(n+2)/2} (-q;q)_n / (q;q^2)_{n+1}
    phi-(q) = sum_{n>=1} q^n (-q;q)_{2n-1} / (q;q^2)_n

are built by exact term recurrences (each term is the previous one
times a few linear factors).  Indefinite theta sums are shell scans
over n with the j-range cut by the region; Appell-type sums expand
each 1/(1 +- q^(dk+e)) geometrically after rewriting negative degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import NonConvergentError, PoleError
from .rings import ZPOLY, ZZ, ZPoly
from .series import QSeries, geom_ratio


def kronecker_minus4(n):
    """The Kronecker symbol (-4 | n): 0, 1, -1 for n = 0, 1, 3 (mod 4)."""
    if n % 2 == 0:
        return 0
    return 1 if n % 4 == 1 else -1


# ---------------------------------------------------------------------------
# Eulerian series


def _eulerian_raw(which, n):
    one = QSeries.one(ZZ, n)
    out = QSeries.zero(ZZ, n)
    if which == "A":
        term = one.shift(1, 1).div_one_minus(1, 1).div_one_minus(1, 1)
        k = 0
        while term.coeffs and (k + 1) ** 2 <= n:
            out = out + term
            k += 1
            term = (term.shift(1, 2 * k + 1).mul_one_minus(-1, 2 * k - 1)
                    .div_one_minus(1, 2 * k + 1).div_one_minus(1, 2 * k + 1))
        return out
    if which == "V1":
        term = one.shift(1, 1).div_one_minus(1, 1)
        k = 0
        while term.coeffs and (k + 1) ** 2 <= n:
            out = out + term
            k += 1
            term = (term.shift(1, 2 * k + 1).mul_one_minus(-1, 2 * k - 1)
                    .div_one_minus(1, 2 * k + 1))
        return out
    if which == "sigma":
        term = one.shift(1, 1).div_one_minus(1, 1)
        k = 0
        while term.coeffs and (k + 1) * (k + 2) // 2 <= n:
            out = out + term
            k += 1
            term = (term.shift(1, k + 1).mul_one_minus(-1, k)
                    .div_one_minus(1, 2 * k + 1))
        return out
    if which == "phi_minus":
        term = one.shift(1, 1).mul_one_minus(-1, 1).div_one_minus(1, 1)
        k = 1
        while term.coeffs and k <= n:
            out = out + term
            k += 1
            term = (term.shift(1, 1).mul_one_minus(-1, 2 * k - 2)
                    .mul_one_minus(-1, 2 * k - 1).div_one_minus(1, 2 * k - 1))
        return out
    raise ValueError(f"unknown Eulerian series {which!r}")


_euler_cache: dict = {}


def eulerian(which, n):
    """One of the Eulerian series A, V1, sigma, phi_minus to order n."""
    cached = _euler_cache.get(which)
    if cached is None or cached.order < n:
        _euler_cache[which] = cached = _eulerian_raw(which, max(n, 64))
    return cached.truncate(n)


# ---------------------------------------------------------------------------
# Bivariate F4 and F8


def _f_bivariate(which, n):
    out = QSeries.zero(ZPOLY, n)
    term = (QSeries.monomial(ZPOLY, ZPoly.const(1), 1, n)
            .div_one_minus(ZPoly.monomial(1, 1), 1)
            .div_one_minus(ZPoly.monomial(1, -1), 1))
    k = 0
    while True:
        lead = (k + 1) ** 2 if which == "F8" else k + 1
        if lead > n or not term.coeffs:
            break
        out = out + term
        k += 1
        if which == "F8":
            term = term.shift(-1, 2 * k + 1).mul_one_minus(1, 2 * k - 1)
        else:
            term = (term.shift(-1, 1).mul_one_minus(1, 2 * k - 1)
                    .mul_one_minus(-1, 2 * k))
        term = (term.div_one_minus(ZPoly.monomial(1, 1), 2 * k + 1)
                .div_one_minus(ZPoly.monomial(1, -1), 2 * k + 1))
    return out


_fz_cache: dict = {}


def F8_series(n):
    """F8(z,q) = sum (-1)^k (q;q^2)_k q^{(k+1)^2} / (zq, q/z; q^2)_{k+1}."""
    cached = _fz_cache.get("F8")
    if cached is None or cached.order < n:
        _fz_cache["F8"] = cached = _f_bivariate("F8", n)
    return cached.truncate(n)


def F4_series(n):
    """F4(z,q) = sum (-1)^k (q;-q)_{2k} q^{k+1} / (zq, q/z; q^2)_{k+1}."""
    cached = _fz_cache.get("F4")
    if cached is None or cached.order < n:
        _fz_cache["F4"] = cached = _f_bivariate("F4", n)
    return cached.truncate(n)


# ---------------------------------------------------------------------------
# Generic Hecke-Rogers evaluator


@dataclass(frozen=True)
class HeckeRogersSpec:
    """An indefinite theta sum over a lattice region.

    region: "jabs" (1 <= j <= |n|, n != 0), "sym" (1-|n| <= j <= |n|,
    n != 0) or "pos" (n >= 1, 1 <= j <= n).  The exponent is the
    integer-valued quadratic (A n^2 + B nj + C j^2 + D n + E j + F)/2
    given by doubled integer coefficients.  Sign flags compose
    multiplicatively; weight is w_n*n + w_j*j + w_0, optionally times
    extra(n, j); zpart attaches the Laurent-polynomial factor used by
    the z-analog identities.
    """

    region: str
    quad2: tuple  # doubled coefficients (A, B, C, D, E, F)
    sg_n: bool = False
    alt_n: bool = False        # (-1)^(n-1)
    alt_j: bool = False        # (-1)^(j-1)
    alt_half: bool = False     # (-1)^(n-1+j(j-1)/2)
    weight: tuple = (0, 0, 1)  # (w_n, w_j, w_0)
    extra: Optional[Callable] = None
    zpart: Optional[str] = None  # None | "geom_j" | "geom_n"

    def exponent(self, n, j):
        a, b, c, d, e, f = self.quad2
        v = a * n * n + b * n * j + c * j * j + d * n + e * j + f
        assert v % 2 == 0
        return v // 2

    def jrange(self, n):
        if self.region == "jabs":
            return range(1, abs(n) + 1)
        if self.region == "sym":
            return range(1 - abs(n), abs(n) + 1)
        if self.region == "pos":
            return range(1, n + 1)
        raise ValueError(f"unknown region {self.region!r}")

    def term_coeff(self, n, j):
        w = self.weight[0] * n + self.weight[1] * j + self.weight[2]
        if self.extra is not None:
            w *= self.extra(n, j)
        if w == 0:
            return 0
        s = 1
        if self.sg_n and n < 0:
            s = -s
        if self.alt_n and n % 2 == 0:
            s = -s
        if self.alt_j and j % 2 == 0:
            s = -s
        if self.alt_half and (n - 1 + j * (j - 1) // 2) % 2 != 0:
            s = -s
        return s * w

    def zfactor(self, n, j):
        if self.zpart == "geom_j":
            return geom_ratio(1 - j, j)
        if self.zpart == "geom_n":
            return geom_ratio(n, -n)
        raise ValueError(f"unknown zpart {self.zpart!r}")


def hecke_rogers(spec: HeckeRogersSpec, n):
    """Evaluate the indefinite theta sum to order n (shell scan over n)."""
    ring = ZZ if spec.zpart is None else ZPOLY
    terms = []
    cap = 8 * (int(n) + 16)

    def shell(m):
        js = spec.jrange(m)
        if not js:
            return False
        landed = False
        for j in js:
            e = spec.exponent(m, j)
            if e <= n:
                landed = True
                c = spec.term_coeff(m, j)
                if c == 0:
                    continue
                if spec.zpart is None:
                    terms.append((e, c))
                else:
                    terms.append((e, spec.zfactor(m, j) * c))
        return landed

    sides = ((1,),) if spec.region == "pos" else ((1,), (-1,))
    for (sgn,) in sides:
        m, misses = sgn, 0
        while misses < 3:
            if shell(m):
                misses = 0
            else:
                misses += 1
            if abs(m) > cap:
                raise NonConvergentError("Hecke-Rogers exponent not bounded below")
            m += sgn
    return QSeries.from_terms(ring, terms, n)


# ---------------------------------------------------------------------------
# Generic Appell-type right-hand sides


@dataclass(frozen=True)
class AppellRhsSpec:
    """sum w(k) (-1)^(k-1)? q^{a k^2 + b k + c} / (1 + s q^{d k + e}).

    krange is "bilateral" (k in Z) or "positive" (k >= 1); zgeom, when
    set, multiplies term k by a Laurent polynomial in z.
    """

    quad: tuple            # (a, b, c) with a > 0
    weight: tuple = (0, 1)  # (w1, w0): w1*k + w0
    alternating: bool = True
    denom_sign: int = 1     # s in 1 + s q^{dk+e}
    denom: tuple = (1, 0)   # (d, e), d != 0
    krange: str = "bilateral"
    zgeom: Optional[Callable] = None

    def exponent(self, k):
        a, b, c = self.quad
        return a * k * k + b * k + c

    def min_exponent(self, k):
        d, e = self.denom
        return self.exponent(k) + max(0, -(d * k + e))

    def term_coeff(self, k):
        w = self.weight[0] * k + self.weight[1]
        if self.alternating and k % 2 == 0:
            w = -w
        return w


def appell_rhs(spec: AppellRhsSpec, n):
    """Evaluate the Appell-type sum to order n."""
    ring = ZZ if spec.zgeom is None else ZPOLY
    d, e = spec.denom
    s = spec.denom_sign
    out = QSeries.zero(ring, n)

    def add_term(k):
        nonlocal out
        c = spec.term_coeff(k)
        if c == 0:
            return
        coef = spec.zgeom(k) * c if spec.zgeom is not None else ring.from_int(c)
        t = QSeries.monomial(ring, coef, spec.exponent(k), n)
        dk = d * k + e
        if dk > 0:
            t = t.div_one_minus(-s, dk)
        elif dk == 0:
            raise PoleError("denominator with zero q-degree in Appell-type sum")
        else:
            # 1/(1+s q^dk) = s q^{-dk} / (s q^{-dk} + 1)
            t = t.shift(s, -dk).div_one_minus(-s, -dk)
        out = out + t

    if spec.krange == "positive":
        k = 1
        while spec.min_exponent(k) <= n:
            add_term(k)
            k += 1
        return out
    for start, step in ((0, 1), (-1, -1)):
        k, misses = start, 0
        while misses < 3:
            if spec.min_exponent(k) <= n:
                misses = 0
                add_term(k)
            else:
                misses += 1
            k += step
    return out


# ---------------------------------------------------------------------------
# Named instances from the identity catalog


def _q2(*coeffs):
    return tuple(2 * c for c in coeffs)


# exponent 2n^2 - n - j^2 + j over 1 <= j <= |n|
HR_HF8 = HeckeRogersSpec("jabs", _q2(2, 0, -1, -1, 1, 0), sg_n=True,
                         alt_j=True, weight=(0, 2, -1))
HR_A = HeckeRogersSpec("jabs", _q2(2, 0, -1, -1, 1, 0), sg_n=True,
                       alt_n=True, weight=(0, 0, 1))
HR_F8Z = HeckeRogersSpec("jabs", _q2(2, 0, -1, -1, 1, 0), sg_n=True,
                         alt_j=True, weight=(0, 0, 1), zpart="geom_j")

# exponent n^2 - j(j-1)/2 over n >= 1, 1 <= j <= n
_HF4_QUAD = (2, 0, -1, 0, 1, 0)
HR_F4Z = HeckeRogersSpec("pos", _HF4_QUAD, weight=(0, 0, 1), zpart="geom_n")
HR_V1 = HeckeRogersSpec("pos", _HF4_QUAD, weight=(0, 0, 1),
                        extra=lambda n, j: kronecker_minus4(n))
HR_HF4 = HeckeRogersSpec("pos", _HF4_QUAD, alt_half=True, weight=(1, 0, 0))

# exponent 4n^2 - 2n - 3j^2 + 2j over 1-|n| <= j <= |n|
HR_HF12 = HeckeRogersSpec("sym", _q2(4, 0, -3, -2, 2, 0), sg_n=True,
                          alt_j=True, weight=(4, 0, -1))
HR_SIGMA = HeckeRogersSpec("sym", _q2(4, 0, -3, -2, 2, 0), sg_n=True,
                           alt_j=True, weight=(0, 0, 1))

# exponent 3n^2 - n - 2j^2 + j over 1-|n| <= j <= |n|
HR_HF24 = HeckeRogersSpec("sym", _q2(3, 0, -2, -1, 1, 0), sg_n=True,
                          alt_n=True, weight=(0, 4, -1))
HR_PHI = HeckeRogersSpec("sym", _q2(3, 0, -2, -1, 1, 0), sg_n=True,
                         alt_n=True, weight=(0, 0, 1))
HR_PSI = HeckeRogersSpec("sym", _q2(3, 0, -2, -1, 1, 0), sg_n=True,
                         alt_j=True, weight=(0, 0, 1))

AP_HF4 = AppellRhsSpec((1, 0, 0), (2, -1), True, 1, (2, -1), "positive")
AP_HF8 = AppellRhsSpec((2, 0, 0), (4, -1), True, 1, (4, -1))
AP_A = AppellRhsSpec((2, 0, 0), (0, 1), True, -1, (4, -1))
AP_HF12 = AppellRhsSpec((3, 0, 0), (6, -1), True, 1, (6, -1))
AP_SIGMA = AppellRhsSpec((3, 0, 0), (0, 1), True, -1, (6, -1))
AP_HF24_A = AppellRhsSpec((6, 0, 0), (12, -1), True, 1, (12, -1))
AP_HF24_B = AppellRhsSpec((6, 0, -2), (12, -7), True, 1, (12, -7))
AP_F4Z = AppellRhsSpec((1, 0, 0), (0, 1), True, 1, (2, -1), "positive",
                       zgeom=lambda k: geom_ratio(1 - k, k))
AP_F8Z = AppellRhsSpec((2, 0, 0), (0, 1), True, 1, (4, -1), "bilateral",
                       zgeom=lambda k: geom_ratio(1 - 2 * k, 2 * k))


# ---------------------------------------------------------------------------
# Humbert's double sum


def humbert_series(n):
    """sum_{m>=0} sum_{u=-m..m} q^{(m+1)^2 - u^2} / (1 - q^{2m+1})."""
    out = QSeries.zero(ZZ, n)
    m = 0
    while 2 * m + 1 <= n:
        row = QSeries.from_terms(
            ZZ, (((m + 1) ** 2 - u * u, 1) for u in range(-m, m + 1)), n)
        out = out + row.div_one_minus(1, 2 * m + 1)
        m += 1
    return out


def c_sum(n_shift, n):
    """C_m = sum_k q^{(2k - m)(2k + 1 - m)/2} (constant in m)."""
    terms = []
    k, misses = 0, 0
    while misses < 3:
        e = (2 * k - n_shift) * (2 * k + 1 - n_shift) // 2
        if e <= n:
            misses = 0
            terms.append((e, 1))
        else:
            misses += 1
        k += 1
    k, misses = -1, 0
    while misses < 3:
        e = (2 * k - n_shift) * (2 * k + 1 - n_shift) // 2
        if e <= n:
            misses = 0
            terms.append((e, 1))
        else:
            misses += 1
        k -= 1
    return QSeries.from_terms(ZZ, terms, n)
