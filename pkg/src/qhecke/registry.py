"""The identity registry.

Every verified identity is an IdentityCase: a stable id, a verification
mode, two pure builders producing comparable exact values at a given
order, and a default order.  IDENTITIES.md at the repository root lists
every case with the statement it checks.

Modes:
  univariate  -- builders return q-series with scalar coefficients
  formal_z    -- builders return series with Laurent-polynomial coefficients
  numeric_z   -- builders take an exact rational witness z0 as well
  jet         -- builders return the z-derivative at z=1 (and its target)
  congruence  -- integer series compared modulo a fixed modulus
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable

from . import classnum, combinat, mock
from .jets import Jet1, jet_appell, jet_of_termsum, jet_theta
from .rings import QQ, QQI, ZPOLY, ZZ, ZPoly, I
from .series import QSeries, eta_quotient, etaq, monomial
from .theta import QMono, appell_m, f_abc, f_abc_terms, g_abc, theta_1_4, theta_sum_scaled


@dataclass(frozen=True)
class IdentityCase:
    id: str
    mode: str
    build_lhs: Callable
    build_rhs: Callable
    default_order: int
    allow_fail: bool = False
    witnesses: tuple = ()
    modulus: int = 0
    pad: int = 8
    note: str = ""


def _eq(powers, n, ring=ZZ):
    return eta_quotient(powers, n, ring)


def _sift_build(series_fn, p):
    return lambda n: series_fn(p * n + p).sift(p)


# ---------------------------------------------------------------------------
# builders that need more than a lambda


def _psi_rhs_bruteforce(n):
    # independent double loop for the psi-shaped sum
    # sum over n' != 0, 1-|n'| <= j <= |n'| of sg(n')(-1)^(j-1) q^(3n'^2-n'-2j^2+j)
    terms = []
    bound = isqrt(n) + 3
    for m in range(-bound, bound + 1):
        if m == 0:
            continue
        sg = 1 if m > 0 else -1
        for j in range(1 - abs(m), abs(m) + 1):
            e = 3 * m * m - m - 2 * j * j + j
            if e <= n:
                terms.append((e, sg * (1 if j % 2 == 1 else -1)))
    return QSeries.from_terms(ZZ, terms, n)


def _hf12_rs_form(n):
    # (r,s)-form of the HF12 indefinite sum (with the sg(r) factor)
    terms = []
    bound = isqrt(n) + 3
    for r in range(0, bound):
        for s in range(0, 2 * bound + 4):
            e = (2 * r + 1) * s + (r + s + 1) ** 2
            if e <= n:
                terms.append((e, (1 if r % 2 == 0 else -1) * (2 * s + 4 * r + 3)))
    for r in range(-1, -bound - 2, -1):
        for s in range(-1, -2 * bound - 6, -1):
            e = (2 * r + 1) * s + (r + s + 1) ** 2
            if e <= n:
                terms.append((e, -(1 if r % 2 == 0 else -1) * (2 * s + 4 * r + 3)))
    return QSeries.from_terms(ZZ, terms, n)


def _u3_j1_cubed(n):
    return (etaq(1, 3 * n + 3) ** 3).sift(3)


def _hf12_7_hsum(n):
    even = classnum.genfun_H(24, 7, n // 2 + 1).inflate(2)
    odd = classnum.genfun_H(24, 19, n // 2 + 1).inflate(2).shift(3, 1)
    return (even + odd).truncate(n)


def _neg_alt_hurwitz(n):
    # sum (-1)^(n+1) H(8n-1) q^n with integer values H(8n-1)
    table = classnum._h12_upto(8 * n + 1)
    terms = []
    for k in range(1, n + 1):
        h = table[8 * k - 1]
        assert h % 12 == 0
        terms.append((k, (h // 12) if k % 2 == 1 else -(h // 12)))
    return QSeries.from_terms(ZZ, terms, n)


def _humbert_triple_expansion(n):
    # sum over (m, u, k >= 1) of q^{(k+m)^2 - (k+u)(k+u-1)/2 - (k-u)(k-u-1)/2}
    terms = []
    m = 0
    while 2 * m + 1 <= n:
        for u in range(-m, m + 1):
            k = 1
            while (m + 1) ** 2 - u * u + (k - 1) * (2 * m + 1) <= n:
                y, x, z = k + m, k + u, k - u
                e = y * y - x * (x - 1) // 2 - z * (z - 1) // 2
                terms.append((e, 1))
                k += 1
        m += 1
    return QSeries.from_terms(ZZ, terms, n)


def _f4_eval(n, z0):
    return mock.F4_series(n).eval_z(z0)


def _f8_eval(n, z0):
    return mock.F8_series(n).eval_z(z0)


def _jq_q2_squared(n):
    return theta_sum_scaled(QMono(1, 1), 2, n) ** 2


def _f4_appell_bridge(n, z0):
    lhs = _f4_eval(n, z0).scale(1 - Fraction(1) / z0)
    rhs = appell_m(QMono(-z0, 0), 2, QMono(-1, 1), n)
    return lhs, rhs


def _f8_appell_bridge(n, z0):
    lhs = _f8_eval(n, z0)
    corr = (_jq_q2_squared(n) * theta_sum_scaled(QMono(z0, 0), 1, n).invert()
            ).scale(Fraction(1, 2))
    rhs = (appell_m(QMono(-z0, 0), 1, QMono(-1, 0), n) - corr
           ).scale(Fraction(-z0, 1) / (1 - z0))
    return lhs, rhs


def _m_evenodd(n, z0):
    lhs = appell_m(QMono(-z0, 0), 1, QMono(-1, 0), n)
    t1 = appell_m(QMono(-z0 * z0, 1), 4, QMono(Fraction(1, z0 * z0), 2), n)
    t2 = appell_m(QMono(-Fraction(1, z0 * z0), 1), 4,
                  QMono(z0 * z0, 2), n).scale(Fraction(1, z0))
    corr = (_jq_q2_squared(n) * theta_sum_scaled(QMono(z0, 0), 1, n).invert()
            ).scale(Fraction(1, 2))
    return lhs, t1 - t2 + corr


# Appell-Lerch relation witnesses: (x, z) scaled monomials chosen to avoid poles
_W_SHIFT = ((QMono(1, 3), QMono(2, 0)), (QMono(-1, 2), QMono(-3, 0)))
_W_INV = ((QMono(-1, 1), QMono(2, 0)), (QMono(1, 2), QMono(Fraction(3, 2), 0)))
_W_CHANGE_Z = ((QMono(1, 3), QMono(-1, 0), QMono(2, 0)),
        (QMono(-1, 2), QMono(3, 0), QMono(Fraction(1, 2), 0)))
_W_QUARTIC = ((QMono(-1, 1), QMono(3, 0)), (QMono(1, 3), QMono(2, 0)))
_W_FG = ((monomial(1, 0, 3), monomial(1, 0, 4)), (monomial(-1, 0, 2), monomial(-1, 0, 4)))


def _m(x, z, n, base=1):
    return appell_m(x, base, z, n)


def _change_z_pair(n, x, z1, z0):
    lhs = _m(x, z1, n) - _m(x, z0, n)
    num = (etaq(1, n).over(QQ) ** 3 * theta_sum_scaled(z1 * z0.inv(), 1, n)
           * theta_sum_scaled(x * z0 * z1, 1, n))
    den = (theta_sum_scaled(z0, 1, n) * theta_sum_scaled(z1, 1, n)
           * theta_sum_scaled(x * z0, 1, n) * theta_sum_scaled(x * z1, 1, n))
    return lhs, (num * den.invert()).shift(z0.coef, z0.qdeg)


def _quartic_pair(n, x, z):
    # middle z-argument reconstructed as z^4 (the printed q^4 makes
    # j(q^4;q^4) = 0); theta term exactly as displayed
    lhs = _m(x, z, n)
    w = z ** 4
    t1 = appell_m(QMono(-x.coef * x.coef, 2 * x.qdeg + 1), 4, w, n)
    t2 = appell_m(QMono(-x.coef * x.coef, 2 * x.qdeg - 1), 4, w, n
                  ).shift(x.coef, x.qdeg - 1)
    num = (etaq(2, n).over(QQ) * etaq(4, n).over(QQ)
           * theta_sum_scaled((x * z * z).neg(), 1, n)
           * theta_sum_scaled((x * z * z * z).neg(), 1, n))
    den = (theta_sum_scaled(x * z, 1, n) * theta_sum_scaled(z ** 4, 4, n)
           * theta_sum_scaled((x * x * z ** 4).neg().qshift(1), 2, n))
    xi = x.inv()
    theta_term = (num * den.invert()).shift(xi.coef, xi.qdeg)
    return lhs, t1 - t2 - theta_term


def _f121_pair(n, x, y):
    z1 = QMono.of(y) * QMono.of(x).inv()
    z0 = z1.inv()
    return f_abc(1, 2, 1, x, y, n).over(QQ), g_abc(1, 2, 1, x, y, z1, z0, n)


def _f151_theta_pair(n):
    x, y = monomial(1, 0, 2), monomial(1, 0, 3)
    lhs = f_abc(1, 5, 1, x, y, n).over(QQ)
    rhs = g_abc(1, 5, 1, x, y, QMono(1, 1), QMono(1, -1), n) - theta_1_4(x, y, n)
    return lhs, rhs


# -- jet builders -----------------------------------------------------------


def _jet_m_times_theta_a(n):
    return (jet_theta(-1, 2, 0, 2, n, zshift=-1)
            * jet_appell((1, 0, 1), 6, (-1, 2, -1), n)).f1


def _jet_m_times_theta_b(n):
    return (jet_theta(1, 4, 1, 2, n, zshift=-1)
            * jet_appell((-1, -6, 2), 6, (1, 6, 3), n)).f1


def _jet_m_times_theta_b_rhs(n):
    return -(_eq({6: 1, 1: 2, 3: -2, 2: -1}, n, QQ) * mock.appell_rhs(mock.AP_HF12, n).over(QQ))


def _jet_theta_quotient_sixfold(n):
    num = jet_theta(1, 4, 1, 2, n) * jet_theta(-1, 4, 4, 6, n) * jet_theta(1, 2, 4, 6, n)
    den = (jet_theta(-1, 2, 5, 6, n, zshift=1) * jet_theta(1, 6, 3, 6, n)
           * jet_theta(-1, 0, 5, 6, n) * jet_theta(1, 4, 5, 6, n))
    return (num / den).f1


def _jet_theta_quotient_double(n):
    t1 = (Jet1.z_power(5) * Jet1.constant(_eq({12: 1, 4: 2}, n, QQ).shift(1, -1))
          * jet_theta(-1, 4, 1, 12, n)
          / (Jet1.constant(_eq({8: 1, 6: 1}, n, QQ)) * jet_theta(-1, 8, 0, 12, n)
             * jet_theta(-1, 8, 4, 12, n)))
    t2 = (Jet1.constant(_eq({12: 2, 8: 1, 24: -2, 4: -1}, n, QQ))
          * jet_theta(1, 8, 14, 24, n) * jet_theta(1, 8, 14, 24, n))
    t3 = (Jet1.constant(_eq({24: 2, 6: 1, 4: 2, 12: -2, 8: -1, 2: -1}, n, QQ).shift(1, 2))
          * jet_theta(1, 8, 8, 12, n))
    t4 = (Jet1.z_power(1) * Jet1.constant(_eq({12: 3}, n, QQ))
          * jet_theta(1, 4, 1, 2, n) * jet_theta(1, 8, 5, 12, n)
          / (jet_theta(1, 4, 1, 12, n) * jet_theta(1, 12, 6, 12, n)))
    t5 = jet_theta(-1, 4, 2, 12, n) / (jet_theta(-1, 8, 4, 12, n)
                                       * jet_theta(-1, 0, 11, 12, n))
    t6 = (Jet1.z_power(4) * jet_theta(-1, 4, 6, 12, n)
          / (Jet1.constant(QSeries.monomial(QQ, 1, 1, n)) * jet_theta(-1, 8, 0, 12, n)
             * jet_theta(-1, 0, 5, 12, n)))
    return (t1 * (t2 - t3) - t4 * (t5 + t6)).f1


def _jet_theta_quotient_pair(n):
    f = ((jet_theta(1, 2, -1, 6, n) * jet_theta(1, 2, 0, 6, n))
         / (jet_theta(-1, 2, -1, 6, n) * jet_theta(-1, 2, 0, 6, n)))
    return f.f1


def _jet_f121_terms(n):
    terms = [(c, zd + 3, qd + 1)
             for c, zd, qd in f_abc_terms(2, 4, 2, monomial(1, 4, 3),
                                          monomial(-1, 2, 4), n)]
    return jet_of_termsum(terms, n)


def _jet_f121_decomp_rhs(n):
    return (jet_theta(-1, 2, 0, 2, n, zshift=-1) * jet_appell((1, 0, 1), 6, (-1, 2, -1), n)
            - jet_theta(1, 4, 1, 2, n, zshift=-1)
            * jet_appell((-1, -6, 2), 6, (-1, 2, 5), n))


def _jet_m_z_change_rhs(n):
    corr = (Jet1.constant(_eq({6: 3}, n, QQ)) * jet_theta(-1, 4, 4, 6, n)
            * jet_theta(1, 2, 4, 6, n)
            / (jet_theta(-1, 2, 5, 6, n) * jet_theta(1, 6, 3, 6, n)
               * jet_theta(-1, 0, 5, 6, n) * jet_theta(1, 4, 5, 6, n)))
    return jet_appell((-1, -6, 2), 6, (1, 6, 3), n) + corr


def _half(n, *quotients):
    out = QSeries.zero(QQ, n)
    for scal, shift, powers in quotients:
        out = out + _eq(powers, n + abs(shift), QQ).shift(scal, shift).truncate(n)
    return out.scale(Fraction(-1, 2))


# ---------------------------------------------------------------------------
# the registry itself


def registry():
    """All identity cases, in a fixed, deterministic order."""
    cases = []
    add = cases.append

    J12_over_2 = {1: 2, 2: -1}      # J_1^2 / J_2
    J14_over_2 = {1: 1, 4: 1, 2: -1}  # J_1 J_4 / J_2
    J22_over_4 = {2: 2, 4: -1}
    J32_over_6 = {3: 2, 6: -1}
    J62_over_12 = {6: 2, 12: -1}

    # -- univariate Hecke-Rogers identities (order 200) ---------------------
    add(IdentityCase(
        "hecke-hf4", "univariate",
        lambda n: _eq(J14_over_2, n) * classnum.genfun_F(4, -1, n),
        lambda n: mock.hecke_rogers(mock.HR_HF4, n), 200,
        note="J1 J4/J2 * sum F(4n-1) q^n = signed-weight-n indefinite sum"))
    add(IdentityCase(
        "hecke-hf8", "univariate",
        lambda n: _eq(J12_over_2, n) * classnum.genfun_F(8, -1, n),
        lambda n: mock.hecke_rogers(mock.HR_HF8, n), 200))
    add(IdentityCase(
        "hecke-hf12", "univariate",
        lambda n: _eq(J12_over_2, n) * classnum.genfun_F(12, -1, n),
        lambda n: mock.hecke_rogers(mock.HR_HF12, n), 200))
    add(IdentityCase(
        "hecke-hf24", "univariate",
        lambda n: _eq(J12_over_2, n) * classnum.genfun_F(24, -1, n),
        lambda n: mock.hecke_rogers(mock.HR_HF24, n), 200))
    add(IdentityCase(
        "hecke-A", "univariate",
        lambda n: _eq(J12_over_2, n) * mock.eulerian("A", n),
        lambda n: mock.hecke_rogers(mock.HR_A, n), 200))
    add(IdentityCase(
        "hecke-V1", "univariate",
        lambda n: _eq(J14_over_2, n) * mock.eulerian("V1", n),
        lambda n: mock.hecke_rogers(mock.HR_V1, n), 200,
        note="weight is the Kronecker symbol (-4|n)"))
    add(IdentityCase(
        "hecke-sigma", "univariate",
        lambda n: _eq(J12_over_2, n) * mock.eulerian("sigma", n),
        lambda n: mock.hecke_rogers(mock.HR_SIGMA, n), 200))
    add(IdentityCase(
        "hecke-phi-minus", "univariate",
        lambda n: _eq(J12_over_2, n) * mock.eulerian("phi_minus", n),
        lambda n: mock.hecke_rogers(mock.HR_PHI, n), 200))
    add(IdentityCase(
        "hecke-psi-rhs", "univariate",
        lambda n: mock.hecke_rogers(mock.HR_PSI, n),
        _psi_rhs_bruteforce, 200,
        note="shell-scan evaluator against an independent double loop; "
             "no Eulerian left-hand side exists for this sum"))

    # -- Appell-Lerch corollaries (order 200) -------------------------------
    add(IdentityCase(
        "appell-hf4", "univariate",
        lambda n: _eq(J12_over_2, n) * classnum.genfun_F(4, -1, n),
        lambda n: mock.appell_rhs(mock.AP_HF4, n), 200))
    add(IdentityCase(
        "appell-hf8", "univariate",
        lambda n: _eq(J22_over_4, n) * classnum.genfun_F(8, -1, n),
        lambda n: mock.appell_rhs(mock.AP_HF8, n), 200))
    add(IdentityCase(
        "appell-A", "univariate",
        lambda n: _eq(J22_over_4, n) * mock.eulerian("A", n),
        lambda n: mock.appell_rhs(mock.AP_A, n), 200))
    add(IdentityCase(
        "appell-hf12", "univariate",
        lambda n: _eq(J32_over_6, n) * classnum.genfun_F(12, -1, n),
        lambda n: (mock.appell_rhs(mock.AP_HF12, n)
                   + _eq({12: 1, 6: 1, 2: 5, 4: -1, 1: -2}, n + 1).shift(2, 1).truncate(n)),
        200, note="includes the eta correction term 2q J12 J6 J2^5/(J4 J1^2)"))
    add(IdentityCase(
        "appell-sigma", "univariate",
        lambda n: _eq(J32_over_6, n) * mock.eulerian("sigma", n),
        lambda n: mock.appell_rhs(mock.AP_SIGMA, n), 200))
    add(IdentityCase(
        "appell-hf24", "univariate",
        lambda n: _eq(J62_over_12, n) * classnum.genfun_F(24, -1, n),
        lambda n: (mock.appell_rhs(mock.AP_HF24_A, n) + mock.appell_rhs(mock.AP_HF24_B, n)
                   + _eq({12: 2, 3: 2, 2: 6, 6: -2, 4: -1, 1: -3}, n + 1).shift(2, 1).truncate(n)),
        200, note="two bilateral sums plus 2q J12^2 J3^2 J2^6/(J6^2 J4 J1^3)"))

    # -- bivariate z-analogs (formal_z, order 100) ---------------------------
    def _mul_poch(series, sign, zdeg, qdeg, step, n):
        d = qdeg
        while d <= n:
            series = series.mul_one_minus(ZPoly.monomial(sign, zdeg), d)
            d += step
        return series

    def _bivar_f8_hecke_lhs(n):
        out = _mul_poch(mock.F8_series(n), 1, 1, 1, 2, n)
        out = _mul_poch(out, 1, -1, 1, 2, n)
        return out * etaq(2, n).over(ZPOLY)

    def _bivar_f4_hecke_lhs(n):
        out = _mul_poch(mock.F4_series(n).alternate(), -1, 1, 1, 1, n)
        out = _mul_poch(out, -1, -1, 0, 1, n)
        return out * etaq(1, n).over(ZPOLY)

    def _bivar_f4_appell_lhs(n):
        out = _mul_poch(mock.F4_series(n), 1, 1, 1, 2, n)
        out = _mul_poch(out, 1, -1, 1, 2, n)
        return out * etaq(2, n).over(ZPOLY)

    def _bivar_f8_appell_lhs(n):
        out = _mul_poch(mock.F8_series(n), 1, 2, 2, 4, n)
        out = _mul_poch(out, 1, -2, 2, 4, n)
        return out * etaq(4, n).over(ZPOLY)

    add(IdentityCase(
        "bivar-f8z-hecke", "formal_z", _bivar_f8_hecke_lhs,
        lambda n: mock.hecke_rogers(mock.HR_F8Z, n), 100,
        note="(zq, q/z, q^2; q^2)_inf F8(z,q) against the geom_j-weighted sum"))
    add(IdentityCase(
        "bivar-f4z-hecke", "formal_z", _bivar_f4_hecke_lhs,
        lambda n: mock.hecke_rogers(mock.HR_F4Z, n), 100,
        note="(-zq, -1/z, q; q)_inf F4(z,-q) against the geom_n-weighted sum"))
    add(IdentityCase(
        "bivar-f4z-appell", "formal_z", _bivar_f4_appell_lhs,
        lambda n: mock.appell_rhs(mock.AP_F4Z, n), 100))
    add(IdentityCase(
        "bivar-f8z-appell", "formal_z", _bivar_f8_appell_lhs,
        lambda n: mock.appell_rhs(mock.AP_F8Z, n), 100))

    # -- specializations of F4/F8 (order 100) --------------------------------
    add(IdentityCase(
        "spec-f8-at-1", "univariate",
        lambda n: _f8_eval(n, 1),
        lambda n: classnum.genfun_F(8, -1, n).over(QQ), 100))
    add(IdentityCase(
        "spec-f8-at-m1", "univariate",
        lambda n: mock.F8_series(n).alternate().eval_z(-1),
        lambda n: (-mock.eulerian("A", n)).over(QQ), 100,
        note="F8(-1,-q) = -A(q)"))
    add(IdentityCase(
        "spec-f4-at-1", "univariate",
        lambda n: _f4_eval(n, 1),
        lambda n: classnum.genfun_F(4, -1, n).over(QQ), 100))
    add(IdentityCase(
        "spec-f4-at-i", "univariate",
        lambda n: mock.F4_series(n).alternate().eval_z(I),
        lambda n: (-mock.eulerian("V1", n)).over(QQI), 100,
        note="F4(i,-q) = -V1(q), Gaussian-rational arithmetic"))

    # -- congruences mod 4 (order 300) ---------------------------------------
    add(IdentityCase(
        "cong-hf8-A", "congruence",
        lambda n: classnum.genfun_F(8, -1, n),
        lambda n: -mock.eulerian("A", n).alternate(), 300, modulus=4))
    add(IdentityCase(
        "cong-hf12-sigma", "congruence",
        lambda n: classnum.genfun_F(12, -1, n),
        lambda n: -mock.eulerian("sigma", n), 300, modulus=4))
    add(IdentityCase(
        "cong-hf24-phi-minus", "congruence",
        lambda n: classnum.genfun_F(24, -1, n),
        lambda n: -mock.eulerian("phi_minus", n), 300, modulus=4))
    add(IdentityCase(
        "cong-A-hurwitz", "congruence",
        lambda n: mock.eulerian("A", n),
        _neg_alt_hurwitz, 300, modulus=4,
        note="coefficients of A against (-1)^(n+1) H(8n-1)"))

    # -- eta-quotient identities (order 150) ----------------------------------
    add(IdentityCase(
        "eta-u3-j1cubed", "univariate", _u3_j1_cubed,
        lambda n: (_eq({1: 4, 3: -1}, n)
                   + _eq({9: 3, 1: 1, 3: -1}, n + 1).shift(9, 1).truncate(n)), 150,
        note="U_3(J_1^3) = J_1^4/J_3 + 9q J_9^3 J_1/J_3"))
    add(IdentityCase(
        "eta-hf12-7-split", "univariate",
        lambda n: classnum.genfun_F(12, 7, n).over(QQ), _hf12_7_hsum, 150,
        note="sum F(12n+7) q^n split into H(24n+7) and 3q H(24n+19) parts"))
    add(IdentityCase(
        "eta-hf12-7-pair", "univariate",
        lambda n: classnum.genfun_F(12, 7, n),
        lambda n: (_eq({6: 2, 4: 5, 12: -1, 2: -3}, n)
                   + _eq({12: 3, 4: 1, 2: -1}, n + 1).shift(3, 1).truncate(n)), 150,
        note="= J6^2 J4^5/(J12 J2^3) + 3q J12^3 J4/J2"))
    add(IdentityCase(
        "eta-hf12-7-quotient", "univariate",
        lambda n: classnum.genfun_F(12, 7, n),
        lambda n: _eq({12: 1, 3: 1, 2: 6, 6: -1, 4: -1, 1: -3}, n), 150,
        note="= J12 J3 J2^6/(J6 J4 J1^3)"))
    add(IdentityCase(
        "eta-hf24-7", "univariate",
        lambda n: classnum.genfun_F(24, 7, n),
        lambda n: _eq({3: 2, 2: 5, 6: -1, 1: -3}, n), 150,
        note="sum H(24n+7) q^n = J3^2 J2^5/(J6 J1^3)"))

    # -- 3-dissections (order 150) --------------------------------------------
    def _tuple_dissect(series_fn, p):
        return lambda n: tuple(series_fn(p * n + p).dissect(p)[i].truncate(n)
                               for i in range(p))

    add(IdentityCase(
        "dissect-j1j2-3", "univariate",
        _tuple_dissect(lambda m: _eq(J12_over_2, m), 3),
        lambda n: (_eq(J32_over_6, n),
                   -_eq({6: 2, 1: 1, 3: -1, 2: -1}, n).scale(2),
                   QSeries.zero(ZZ, n)), 150,
        note="3-dissection of J_1^2/J_2"))
    add(IdentityCase(
        "dissect-j2j4-3", "univariate",
        _tuple_dissect(lambda m: _eq(J22_over_4, m), 3),
        lambda n: (_eq(J62_over_12, n),
                   QSeries.zero(ZZ, n),
                   -_eq({12: 2, 2: 1, 6: -1, 4: -1}, n).scale(2)), 150,
        note="3-dissection of J_2^2/J_4"))
    add(IdentityCase(
        "dissect-hf4-3", "univariate",
        _tuple_dissect(lambda m: classnum.genfun_F(4, -1, m), 3),
        lambda n: (classnum.genfun_F(12, -1, n), classnum.genfun_F(12, 3, n),
                   classnum.genfun_F(12, 7, n)), 150))
    add(IdentityCase(
        "dissect-hf8-3", "univariate",
        _tuple_dissect(lambda m: classnum.genfun_F(8, -1, m), 3),
        lambda n: (classnum.genfun_F(24, -1, n), classnum.genfun_F(24, 7, n),
                   classnum.genfun_F(24, 15, n)), 150))
    add(IdentityCase(
        "dissect-appell-hf4-3", "univariate",
        _sift_build(lambda m: mock.appell_rhs(mock.AP_HF4, m), 3),
        lambda n: mock.appell_rhs(mock.AP_HF12, n), 150,
        note="U_3 of the HF4 Appell sum is the HF12 Appell sum"))
    add(IdentityCase(
        "dissect-appell-hf8-3", "univariate",
        _sift_build(lambda m: mock.appell_rhs(mock.AP_HF8, m), 3),
        lambda n: mock.appell_rhs(mock.AP_HF24_A, n) + mock.appell_rhs(mock.AP_HF24_B, n),
        150, note="U_3 of the HF8 Appell sum is the two-part HF24 Appell sum"))

    # -- derivative lemmas via jets (order 80; two heavier targets at 150) ----
    def _zero(n):
        return QSeries.zero(QQ, n)

    add(IdentityCase("dz-j-zq-q2", "jet",
                     lambda n: jet_theta(1, 1, 1, 2, n).f1, _zero, 80,
                     note="d/dz j(zq;q^2)|_1 = 0"))
    add(IdentityCase("dz-j-mzq-q2", "jet",
                     lambda n: jet_theta(-1, 1, 1, 2, n).f1, _zero, 80,
                     note="d/dz j(-zq;q^2)|_1 = 0"))
    add(IdentityCase("dz-j-mz2-q1", "jet",
                     lambda n: jet_theta(-1, 2, 0, 1, n, zshift=-1).f1, _zero, 80,
                     note="d/dz (1/z) j(-z^2;q)|_1 = 0"))
    add(IdentityCase(
        "dz-j-z6q-q3", "jet",
        lambda n: jet_theta(1, 6, 1, 3, n, zshift=-1).f1,
        lambda n: -(_eq({1: 4, 3: -1}, n, QQ)
                    + _eq({9: 3, 1: 1, 3: -1}, n + 1, QQ).shift(9, 1).truncate(n)), 80))
    add(IdentityCase(
        "dz-j-mz6q-q3", "jet",
        lambda n: jet_theta(-1, 6, 1, 3, n, zshift=-1).f1,
        lambda n: -_eq({1: 5, 2: -2}, n, QQ), 80))
    add(IdentityCase(
        "dz-j-z4q-q4", "jet",
        lambda n: jet_theta(1, 4, 1, 4, n, zshift=-1).f1,
        lambda n: -_eq({2: 9, 4: -3, 1: -3}, n, QQ), 80))
    add(IdentityCase(
        "dz-j-mz4q-q4", "jet",
        lambda n: jet_theta(-1, 4, 1, 4, n, zshift=-1).f1,
        lambda n: -_eq({1: 3}, n, QQ), 80))
    add(IdentityCase(
        "dz-j-z3q-q6", "jet",
        lambda n: jet_theta(1, 3, 1, 6, n, zshift=-1).f1,
        lambda n: -_eq({2: 5, 1: -2}, n, QQ), 80))
    add(IdentityCase(
        "dz-j-mz3q-q6", "jet",
        lambda n: jet_theta(-1, 3, 1, 6, n, zshift=-1).f1,
        lambda n: -_eq({4: 2, 1: 2, 2: -1}, n, QQ), 80))
    add(IdentityCase(
        "dz-j-mz12q5-q12", "jet",
        lambda n: jet_theta(-1, 12, 5, 12, n, zshift=-1).f1,
        lambda n: _half(n, (1, 0, {1: 4, 3: -1}), (9, 1, {9: 3, 1: 1, 3: -1}),
                        (1, 0, {1: 5, 2: -2})), 80))
    add(IdentityCase(
        "dz-j-mz12q-q12", "jet",
        lambda n: jet_theta(-1, 12, 1, 12, n, zshift=-5).f1,
        lambda n: _half(n, (1, -1, {1: 4, 3: -1}), (9, 0, {9: 3, 1: 1, 3: -1}),
                        (-1, -1, {1: 5, 2: -2})), 80))
    add(IdentityCase(
        "dz-j-z12q5-q12", "jet",
        lambda n: jet_theta(1, 12, 5, 12, n, zshift=-1).f1,
        lambda n: _half(n, (1, 0, {12: 1, 3: 1, 2: 12, 6: -3, 4: -4, 1: -4}),
                        (-9, 1, {18: 9, 12: 1, 3: 1, 2: 3, 36: -3, 9: -3, 6: -3, 4: -1, 1: -1}),
                        (1, 0, {2: 13, 4: -5, 1: -5})), 80))
    add(IdentityCase(
        "dz-j-z12q-q12", "jet",
        lambda n: jet_theta(1, 12, 1, 12, n, zshift=-5).f1,
        lambda n: -_half(n, (1, -1, {12: 1, 3: 1, 2: 12, 6: -3, 4: -4, 1: -4}),
                         (-9, 0, {18: 9, 12: 1, 3: 1, 2: 3, 36: -3, 9: -3, 6: -3, 4: -1, 1: -1}),
                         (-1, -1, {2: 13, 4: -5, 1: -5})), 80))
    add(IdentityCase(
        "dz-theta-quotient-q6-pair", "jet", _jet_theta_quotient_pair,
        lambda n: _eq({6: 7, 4: 1, 1: 2, 12: -3, 3: -2, 2: -3}, n, QQ), 80,
        note="theta-quotient derivative inside the first q^6 lemma"))
    add(IdentityCase(
        "dz-m-appell-q6", "jet",
        lambda n: jet_appell((1, 0, 1), 6, (-1, 2, -1), n).f1,
        lambda n: _eq({6: 12, 4: 2, 1: 3, 12: -6, 3: -3, 2: -5}, n, QQ).scale(Fraction(-1, 2)),
        80, note="d/dz m(q, q^6, -z^2/q)|_1"))
    add(IdentityCase(
        "dz-m-times-theta-q6-a", "jet", _jet_m_times_theta_a,
        lambda n: -_eq({6: 12, 4: 4, 1: 3, 12: -6, 3: -3, 2: -6}, n, QQ), 80))
    add(IdentityCase(
        "dz-m-times-theta-q6-b", "jet", _jet_m_times_theta_b, _jet_m_times_theta_b_rhs, 80))
    add(IdentityCase(
        "dz-theta-quotient-q6-sixfold", "jet", _jet_theta_quotient_sixfold,
        lambda n: (-_eq({6: 9, 4: 4, 1: 3, 12: -6, 3: -3, 2: -6}, n, QQ)
                   - _eq({12: 1, 2: 4, 6: -1, 4: -1, 3: -2}, n + 1, QQ).shift(2, 1).truncate(n)),
        150))
    add(IdentityCase(
        "dz-theta-quotient-q12-double", "jet", _jet_theta_quotient_double,
        lambda n: _eq({12: 3, 3: 2, 2: 5, 6: -4, 4: -1, 1: -1}, n + 1, QQ
                      ).shift(-2, 1).truncate(n), 150))
    add(IdentityCase(
        "dz-eta-logderiv-combo", "univariate",
        lambda n: (_eq({6: 1, 2: 2, 1: 3, 12: -2, 3: -3}, n, QQ).scale(Fraction(2, 3))
                   + _eq({6: 3, 4: 3, 1: 3, 12: -3, 3: -3, 2: -4}, n, QQ)
                   * (_eq({2: 3, 6: -1}, n, QQ).scale(Fraction(1, 3))
                      + _eq({18: 3, 6: -1}, n + 2, QQ).shift(3, 2).truncate(n))
                   - _eq({6: 4, 4: 6, 1: 6, 12: -4, 3: -4, 2: -7}, n, QQ).scale(Fraction(2, 3))
                   - _eq({6: 1, 4: 3, 2: 2, 12: -3, 3: -2}, n, QQ).scale(Fraction(4, 3))),
        lambda n: (-_eq({6: 9, 4: 4, 1: 3, 12: -6, 3: -3, 2: -6}, n, QQ)
                   - _eq({12: 1, 2: 4, 6: -1, 4: -1, 3: -2}, n + 1, QQ).shift(2, 1).truncate(n)),
        150, note="logarithmic-derivative eta combination from the q^6 quotient lemma"))
    add(IdentityCase(
        "dz-f121-hecke", "jet",
        lambda n: _jet_f121_terms(n).f1,
        lambda n: mock.hecke_rogers(mock.HR_HF12, n).over(QQ), 80,
        note="d/dz (q z^3 f_{1,2,1}(q^3 z^4, -q^4 z^2, q^2))|_1 is the HF12 sum"))
    add(IdentityCase(
        "dz-f121-decomp", "jet",
        lambda n: _jet_f121_terms(n).f1,
        lambda n: _jet_f121_decomp_rhs(n).f1, 80,
        note="the same jet through the theta/Appell-Lerch decomposition"))
    add(IdentityCase(
        "dz-m-z-change", "jet",
        lambda n: jet_appell((-1, -6, 2), 6, (-1, 2, 5), n).f1,
        lambda n: _jet_m_z_change_rhs(n).f1, 80,
        note="z-argument change m(.,q^6,-q^5 z^2) -> m(.,q^6,q^3 z^6) plus theta term"))

    # -- Appell-Lerch machinery instances (orders 30-40) ----------------------
    for i, (x, z) in enumerate(_W_SHIFT, 1):
        add(IdentityCase(
            f"mrel-zshift-w{i}", "univariate",
            lambda n, x=x, z=z: _m(x, z, n),
            lambda n, x=x, z=z: _m(x, z.qshift(1), n), 30,
            note=f"m(x,q,z) = m(x,q,qz) at x={x.coef}q^{x.qdeg}, z={z.coef}"))
    for i, (x, z) in enumerate(_W_INV, 1):
        add(IdentityCase(
            f"mrel-xinverse-w{i}", "univariate",
            lambda n, x=x, z=z: _m(x, z, n),
            lambda n, x=x, z=z: _m(x.inv(), z.inv(), n).shift(x.inv().coef, x.inv().qdeg),
            30, note="m(x,q,z) = x^-1 m(x^-1,q,z^-1)"))
    for i, (x, z) in enumerate(_W_SHIFT, 1):
        add(IdentityCase(
            f"mrel-xshift-up-w{i}", "univariate",
            lambda n, x=x, z=z: _m(x.qshift(1), z, n),
            lambda n, x=x, z=z: QSeries.one(QQ, n) - _m(x, z, n).shift(x.coef, x.qdeg),
            30, note="m(qx,q,z) = 1 - x m(x,q,z)"))
    for i, (x, z) in enumerate(_W_SHIFT, 1):
        add(IdentityCase(
            f"mrel-xshift-down-w{i}", "univariate",
            lambda n, x=x, z=z: _m(x, z, n),
            lambda n, x=x, z=z: (QSeries.one(QQ, n)
                                 - _m(x.qshift(-1), z, n).shift(x.coef, x.qdeg - 1)),
            30, note="m(x,q,z) = 1 - q^-1 x m(q^-1 x,q,z)"))
    for i, (x, z) in enumerate(_W_SHIFT, 1):
        add(IdentityCase(
            f"mrel-reflect-w{i}", "univariate",
            lambda n, x=x, z=z: _m(x, z, n),
            lambda n, x=x, z=z: (x.inv().as_series(n)
                                 - _m(x.qshift(1), z, n).shift(x.inv().coef, x.inv().qdeg)),
            30, note="m(x,q,z) = x^-1 - x^-1 m(qx,q,z)"))
    for i, (x, z1, z0) in enumerate(_W_CHANGE_Z, 1):
        add(IdentityCase(
            f"mrel-change-z-w{i}", "univariate",
            lambda n, x=x, z1=z1, z0=z0: _change_z_pair(n, x, z1, z0)[0],
            lambda n, x=x, z1=z1, z0=z0: _change_z_pair(n, x, z1, z0)[1], 30,
            note="z0 J1^3 j(z1/z0;q) j(x z0 z1;q) correction"))
    for i, (x, z) in enumerate(_W_QUARTIC, 1):
        add(IdentityCase(
            f"mrel-quartic-w{i}", "univariate",
            lambda n, x=x, z=z: _quartic_pair(n, x, z)[0],
            lambda n, x=x, z=z: _quartic_pair(n, x, z)[1], 30,
            note="base q -> q^4 relation; middle z-argument reconstructed as z^4 "
                 "(printed form has j(q^4;q^4) = 0 in a denominator)"))
    for i, (x, y) in enumerate(_W_FG, 1):
        add(IdentityCase(
            f"mrel-f121-g121-w{i}", "univariate",
            lambda n, x=x, y=y: _f121_pair(n, x, y)[0],
            lambda n, x=x, y=y: _f121_pair(n, x, y)[1], 40,
            note="f_{1,2,1}(x,y,q) = g_{1,2,1}(x,y,q,y/x,x/y)"))
    add(IdentityCase(
        "mrel-f151-theta14", "univariate",
        lambda n: _f151_theta_pair(n)[0],
        lambda n: _f151_theta_pair(n)[1], 40, allow_fail=True,
        note="f_{1,5,1} = g_{1,5,1} - Theta_{1,4} with the correction transcribed "
             "verbatim; the printed formula repeats j(y/x;q^24) in numerator and "
             "denominator and fails at q^0 (the same instance matches with the "
             "correction's sign flipped; reconciliation left to the reader)"))
    add(IdentityCase(
        "mrel-evenodd", "numeric_z",
        lambda n, z0: _m_evenodd(n, z0)[0],
        lambda n, z0: _m_evenodd(n, z0)[1], 40,
        witnesses=(Fraction(2), Fraction(3), Fraction(1, 2)),
        note="even/odd split of m(-z,q,-1) into base-q^4 sums plus "
             "j(q;q^2)^2/(2 j(z;q))"))

    # -- numeric-z Appell-Lerch bridges for F4/F8 (order 60) ------------------
    ws = (Fraction(2), Fraction(3), Fraction(-2), Fraction(1, 2), Fraction(-1, 3))
    add(IdentityCase(
        "numz-f4-appell", "numeric_z",
        lambda n, z0: _f4_appell_bridge(n, z0)[0],
        lambda n, z0: _f4_appell_bridge(n, z0)[1], 60, witnesses=ws,
        note="(1 - 1/z) F4(z,q) = m(-z, q^2, -q)"))
    add(IdentityCase(
        "numz-f8-appell", "numeric_z",
        lambda n, z0: _f8_appell_bridge(n, z0)[0],
        lambda n, z0: _f8_appell_bridge(n, z0)[1], 60, witnesses=ws,
        note="F8(z,q) = -z/(1-z) (m(-z,q,-1) - j(q;q^2)^2/(2 j(z;q)))"))

    # -- Humbert's formula and the combinatorial theorems ----------------------
    add(IdentityCase(
        "humbert-hf4", "univariate", mock.humbert_series,
        lambda n: classnum.genfun_F(4, -1, n), 200,
        note="double sum q^{(m+1)^2-u^2}/(1-q^{2m+1}) generates F(4n-1)"))
    add(IdentityCase(
        "humbert-telescope", "univariate", _humbert_triple_expansion,
        mock.humbert_series, 60,
        note="termwise geometric expansion of the double sum lands on the "
             "unimodal (y,x,z) triple sum"))
    add(IdentityCase(
        "unimodal-eq-hf4", "univariate",
        lambda n: combinat.P_series(n, "formula"),
        lambda n: classnum.genfun_F(4, -1, n), 300,
        note="P(n) = F(4n-1): enumeration against reduced-form class numbers"))
    add(IdentityCase(
        "consecutive-eq-hf8", "univariate",
        lambda n: combinat.Q_series(n, "formula").over(QQ),
        lambda n: classnum.genfun_H(8, -1, n), 300,
        note="Q(n) = H(8n-1)"))
    add(IdentityCase(
        "consecutive-eq-unimodal", "univariate",
        lambda n: combinat.Q_series(n, "formula"),
        lambda n: combinat.P_series(2 * n + 1, "formula").sift(2), 150,
        note="Q(n) = P(2n)"))
    add(IdentityCase(
        "unimodal-methods", "univariate",
        lambda n: combinat.P_series(n, "direct"),
        lambda n: combinat.P_series(n, "formula"), 200,
        note="per-n enumeration against the (y,x,z) triple-sum formula"))
    add(IdentityCase(
        "consecutive-methods", "univariate",
        lambda n: combinat.Q_series(n, "direct"),
        lambda n: combinat.Q_series(n, "formula"), 200))

    # -- misc structural checks ------------------------------------------------
    add(IdentityCase(
        "eq-hf12-rs-form", "univariate", _hf12_rs_form,
        lambda n: mock.hecke_rogers(mock.HR_HF12, n), 150,
        note="(r,s)-quadrant form of the HF12 sum (includes the sg(r) factor "
             "omitted in the displayed version)"))
    for m in (0, 1, 2, 3, 7, 10):
        add(IdentityCase(
            f"theta-row-constant-{m}", "univariate",
            lambda n, m=m: mock.c_sum(m, n),
            lambda n: _eq({2: 2, 1: -1}, n), 60,
            note="C_m = sum_k q^{(2k-m)(2k+1-m)/2} is independent of m"))

    return cases


def registry_ids():
    return [c.id for c in registry()]


def get_case(case_id):
    for c in registry():
        if c.id == case_id:
            return c
    raise KeyError(case_id)
