"""Theta functions, Appell-Lerch sums and indefinite-theta building blocks.

j(x;q) follows the triple-product convention
    j(x;q) = (x, q/x, q; q)_inf = sum_{n} (-1)^n q^{n(n-1)/2} x^n,
m(x,q,z) the bilateral Appell-Lerch sum, and f_{a,b,c} / g_{a,b,c} the
indefinite-theta blocks they decompose into.  Exact arguments are
scaled q-monomials c*q^d (c a nonzero rational), which covers every
witness instance in the registry; z-free scalars are the degenerate
case d = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonConvergentError, PoleError
from .rings import QQ, ZPOLY, ZZ, ZPoly
from .series import INF, QSeries, SignedMonomial, etaq, pochhammer


@dataclass(frozen=True)
class QMono:
    """A scaled q-monomial coef * q^qdeg with nonzero rational coef."""

    coef: Fraction
    qdeg: int

    def __post_init__(self):
        if self.coef == 0:
            raise ValueError("monomial coefficient must be nonzero")

    @classmethod
    def of(cls, value):
        if isinstance(value, QMono):
            return value
        if isinstance(value, SignedMonomial):
            if value.zdeg != 0:
                raise ValueError("z-bearing monomial where a scalar was expected")
            return cls(value.sign, value.qdeg)
        return cls(Fraction(value), 0)

    def __mul__(self, other):
        other = QMono.of(other)
        return QMono(self.coef * other.coef, self.qdeg + other.qdeg)

    def inv(self):
        return QMono(Fraction(1) / self.coef, -self.qdeg)

    def __pow__(self, k):
        c = Fraction(self.coef) ** k
        return QMono(c, self.qdeg * k)

    def neg(self):
        return QMono(-self.coef, self.qdeg)

    def qshift(self, d):
        return QMono(self.coef, self.qdeg + d)

    def as_series(self, n=INF):
        return QSeries.monomial(QQ, self.coef, self.qdeg, n)


@dataclass(frozen=True)
class ThetaArg:
    monomial: SignedMonomial
    base: int

    def __post_init__(self):
        if self.base < 1:
            raise ValueError("theta base must be >= 1")


def theta_sum_scaled(x: QMono, base, n):
    """j(c*q^d; q^base) by the bilateral sum, rational coefficients."""
    c = Fraction(x.coef)
    b = x.qdeg
    terms = []

    def qdeg(m):
        return base * m * (m - 1) // 2 + b * m

    m = 0
    while True:
        e = qdeg(m)
        if e <= n:
            terms.append((e, (c ** m) if m % 2 == 0 else -(c ** m)))
        elif 2 * base * m > base - 2 * b:
            break
        m += 1
    m = -1
    while True:
        e = qdeg(m)
        if e <= n:
            terms.append((e, (c ** m) if m % 2 == 0 else -(c ** m)))
        elif 2 * base * m < base - 2 * b:
            break
        m -= 1
    return QSeries.from_terms(QQ, terms, n)


def jtheta(arg: ThetaArg, n, method="sum"):
    """j(x; q^base) to order n; sum and product methods must agree.

    Coefficients are integers for z-free x and Laurent polynomials in z
    otherwise.
    """
    x, base = arg.monomial, arg.base
    if method == "product":
        qbase_over_x = SignedMonomial(x.sign, -x.zdeg, base - x.qdeg)
        out = pochhammer(x, base, None, n)
        out = out * pochhammer(qbase_over_x, base, None, n).over(out.ring)
        return out * etaq(base, n).over(out.ring)
    if method != "sum":
        raise ValueError(f"unknown method {method!r}")
    ring = ZZ if x.zdeg == 0 else ZPOLY
    b = x.qdeg
    terms = []

    def emit(m):
        c = 1 if (-x.sign == 1 or m % 2 == 0) else -1
        e = base * m * (m - 1) // 2 + b * m
        terms.append((e, ZPoly.monomial(c, x.zdeg * m) if ring is ZPOLY else c))

    m = 0
    while True:
        e = base * m * (m - 1) // 2 + b * m
        if e <= n:
            emit(m)
        elif 2 * base * m > base - 2 * b:
            break
        m += 1
    m = -1
    while True:
        e = base * m * (m - 1) // 2 + b * m
        if e <= n:
            emit(m)
        elif 2 * base * m < base - 2 * b:
            break
        m -= 1
    return QSeries.from_terms(ring, terms, n)


def _denominator_pass(series, coef, qdeg):
    """Multiply by 1/(1 - coef*q^qdeg), exact for any sign of qdeg."""
    if qdeg > 0:
        return series.div_one_minus(coef, qdeg)
    if qdeg == 0:
        if coef == 1:
            raise PoleError("1/(1-x*z) pole: x*z = 1 with zero q-degree")
        return series.scale(Fraction(1) / (1 - coef))
    cinv = Fraction(1) / coef
    return series.shift(-cinv, -qdeg).div_one_minus(cinv, -qdeg)


def appell_m(x, base, z, n):
    """Appell-Lerch m(x, q^base, z) to order n, rational coefficients.

    x and z are scaled q-monomials (rationals allowed for z, including
    plain numbers); each bilateral-sum denominator 1 - q^{base(r-1)} x z
    is expanded geometrically after rewriting negative q-degrees.
    """
    x = QMono.of(x)
    z = QMono.of(z)
    jz = theta_sum_scaled(z, base, n)
    xz = x * z
    cz = Fraction(z.coef)

    def min_exp(r):
        d = base * (r - 1) + xz.qdeg
        return base * r * (r - 1) // 2 + z.qdeg * r + max(0, -d)

    total = QSeries.zero(QQ, n)

    def add_term(r):
        nonlocal total
        c = (cz ** r) if r % 2 == 0 else -(cz ** r)
        t = QSeries.monomial(QQ, c, base * r * (r - 1) // 2 + z.qdeg * r, n)
        t = _denominator_pass(t, xz.coef, base * (r - 1) + xz.qdeg)
        total = total + t

    r, misses = 0, 0
    while misses < 3:
        if min_exp(r) <= n:
            misses = 0
            add_term(r)
        else:
            misses += 1
        r += 1
    r, misses = -1, 0
    while misses < 3:
        if min_exp(r) <= n:
            misses = 0
            add_term(r)
        else:
            misses += 1
        r -= 1
    return total * jz.invert()


def f_abc_terms(a, b, c, x: SignedMonomial, y: SignedMonomial, n):
    """Terms (coef, zdeg, qdeg) of f_{a,b,c}(x,y,q) with q-degree <= n.

    f_{a,b,c}(x,y,q) = sum_{sg(r)=sg(s)} sg(r) (-1)^{r+s} x^r y^s
                       q^{a r(r-1)/2 + b rs + c s(s-1)/2}.
    """
    cap = 8 * (int(n) + a + b + c + abs(x.qdeg) + abs(y.qdeg) + 10)

    def expo(r, s):
        return (a * r * (r - 1) // 2 + b * r * s + c * s * (s - 1) // 2
                + x.qdeg * r + y.qdeg * s)

    def coef(r, s):
        sg = 1 if r >= 0 else -1
        neg = (r + s) % 2
        sgn_x = 1 if (x.sign == 1 or r % 2 == 0) else -1
        sgn_y = 1 if (y.sign == 1 or s % 2 == 0) else -1
        v = sg * sgn_x * sgn_y
        return -v if neg else v

    out = []
    for quadrant in (1, -1):
        row_misses = 0
        i = 0
        while row_misses < 3:
            if i > cap:
                raise NonConvergentError("f_{a,b,c} exponent not bounded below")
            r = i if quadrant == 1 else -1 - i
            landed = False
            j = 0
            while True:
                s = j if quadrant == 1 else -1 - j
                e = expo(r, s)
                if e <= n:
                    landed = True
                    out.append((coef(r, s), x.zdeg * r + y.zdeg * s, e))
                else:
                    # upward parabola in s: past the vertex we may stop
                    if quadrant == 1 and 2 * c * s > c - 2 * b * r - 2 * y.qdeg:
                        break
                    if quadrant == -1 and 2 * c * s < c - 2 * b * r - 2 * y.qdeg:
                        break
                if j > cap:
                    raise NonConvergentError("f_{a,b,c} exponent not bounded below")
                j += 1
            row_misses = 0 if landed else row_misses + 1
            i += 1
    return out


def f_abc(a, b, c, x: SignedMonomial, y: SignedMonomial, n):
    """The indefinite-theta block f_{a,b,c}(x,y,q), exact to order n."""
    terms = f_abc_terms(a, b, c, x, y, n)
    if x.zdeg == 0 and y.zdeg == 0:
        return QSeries.from_terms(ZZ, ((e, v) for v, _, e in terms), n)
    return QSeries.from_terms(
        ZPOLY, ((e, ZPoly.monomial(v, zd)) for v, zd, e in terms), n)


def g_abc(a, b, c, x: SignedMonomial, y: SignedMonomial, z1, z0, n):
    """g_{a,b,c}(x,y,q,z1,z0): two t-sums of theta times Appell-Lerch terms."""
    xm = QMono.of(x)
    ym = QMono.of(y)
    z1 = QMono.of(z1)
    z0 = QMono.of(z0)
    mbase = a * (b * b - a * c)
    out = QSeries.zero(QQ, n)
    for t in range(a):
        pref = (ym.neg() ** t).qshift(c * t * (t - 1) // 2)
        jfac = theta_sum_scaled(QMono(xm.coef, xm.qdeg + b * t), a, n)
        marg = ((ym.neg() ** a) * (xm.neg() ** (-b))).neg().qshift(
            a * b * (b + 1) // 2 - c * a * (a + 1) // 2 - t * (b * b - a * c))
        mser = appell_m(marg, mbase, z0, n)
        out = out + (jfac * mser).shift(pref.coef, pref.qdeg)
    for t in range(c):
        pref = (xm.neg() ** t).qshift(a * t * (t - 1) // 2)
        jfac = theta_sum_scaled(QMono(ym.coef, ym.qdeg + b * t), c, n)
        marg = ((xm.neg() ** c) * (ym.neg() ** (-b))).neg().qshift(
            c * b * (b + 1) // 2 - a * c * (c + 1) // 2 - t * (b * b - a * c))
        mser = appell_m(marg, mbase, z1, n)
        out = out + (jfac * mser).shift(pref.coef, pref.qdeg)
    return out


def theta_1_4_parts(x: SignedMonomial, y: SignedMonomial, n):
    """The two inner sums S1, S2 of the theta correction, as displayed."""
    xm, ym = QMono.of(x), QMono.of(y)

    def j(mono, base):
        return theta_sum_scaled(mono, base, n)

    def J(k, power=1):
        s = etaq(k, n).over(QQ)
        return s ** power if power != 1 else s

    y_over_x = ym * xm.inv()
    xy = xm * ym
    x2y2 = xy * xy
    y2_over_x2 = y_over_x * y_over_x

    s1_pref = (j(x2y2.qshift(22), 24) * j(y_over_x.neg().qshift(12), 24)
               * j(xy.qshift(5), 12) * (J(12, 3) * J(48)).invert())
    s1_inner = (j(x2y2.neg().qshift(10), 24) * j(y2_over_x2.qshift(12), 24) * J(24, 2)
                + (j(x2y2.neg().qshift(22), 24) * j(y_over_x.qshift(12), 24) ** 2
                   * j(y_over_x.neg(), 24) ** 2 * J(24).invert()
                   ).shift((xm * xm).coef, (xm * xm).qdeg + 5))
    s1 = s1_pref * s1_inner

    s2_pref = (j(x2y2.qshift(10), 24) * j(y_over_x.neg(), 24)
               * j(xy.qshift(11), 12) * J(12, 2).invert())
    s2_inner = ((j(x2y2.neg().qshift(10), 24) * j(y2_over_x2.qshift(12), 24)
                 * J(48) * J(24).invert()).shift(ym.inv().coef, ym.inv().qdeg + 2)
                + (j(x2y2.neg().qshift(22), 24) * j(y2_over_x2.qshift(24), 48) ** 2
                   * J(48).invert()).shift(xm.coef, xm.qdeg + 1))
    s2 = s2_pref * s2_inner
    return s1, s2


def theta_1_4(x: SignedMonomial, y: SignedMonomial, n):
    """The printed theta correction for f_{1,5,1}, transcribed verbatim.

    The leading j(y/x;q^24) appears both in the numerator and in the
    denominator exactly as displayed; see the registry notes on the
    expected-fail status of the identity using it.
    """
    xm, ym = QMono.of(x), QMono.of(y)

    def j(mono, base):
        return theta_sum_scaled(mono, base, n)

    y_over_x = ym * xm.inv()
    xy = xm * ym
    s1, s2 = theta_1_4_parts(x, y, n)
    front = (j(y_over_x, 24)
             * (j(y_over_x, 24) * j((xm ** 4).neg().qshift(10), 24)
                * j((ym ** 4).neg().qshift(10), 24)).invert()
             ).shift(-xy.coef, xy.qdeg + 1)
    return front * (j(QMono(1, 4), 16) * s1 - (j(QMono(1, 8), 16) * s2).shift(1, 1))
