"""Theta function and Appell-Lerch sum tests."""

from fractions import Fraction

import pytest

from qhecke.errors import PoleError
from qhecke.rings import QQ, ZZ, ZPoly
from qhecke.series import etaq, monomial
from qhecke.theta import (QMono, ThetaArg, appell_m, f_abc, f_abc_terms, g_abc,
                          jtheta, theta_1_4_parts, theta_sum_scaled)

# every theta argument shape the registry builders touch
REGISTRY_THETA_ARGS = [
    (1, 0, 1, 2), (-1, 0, 1, 2), (1, 1, 1, 2), (-1, 1, 1, 2), (-1, 2, 0, 1),
    (1, 6, 1, 3), (-1, 6, 1, 3), (1, 4, 1, 4), (-1, 4, 1, 4), (1, 3, 1, 6),
    (-1, 3, 1, 6), (-1, 12, 5, 12), (-1, 12, 1, 12), (1, 12, 5, 12),
    (1, 12, 1, 12), (-1, 2, 0, 2), (1, 4, 1, 2), (1, 2, -1, 6), (1, 2, 0, 6),
    (-1, 2, -1, 6), (-1, 2, 0, 6), (-1, 4, 4, 6), (1, 2, 4, 6), (-1, 2, 5, 6),
    (1, 6, 3, 6), (-1, 0, 5, 6), (1, 4, 5, 6), (-1, 4, 1, 12), (-1, 8, 0, 12),
    (-1, 8, 4, 12), (1, 8, 14, 24), (1, 8, 8, 12), (1, 8, 5, 12), (1, 4, 1, 12),
    (1, 12, 6, 12), (-1, 4, 2, 12), (-1, 0, 11, 12), (-1, 4, 6, 12),
    (-1, 0, 5, 12),
]


def test_jtheta_sum_examples():
    assert [jtheta(ThetaArg(monomial(1, 0, 1), 2), 9).coeff(e) for e in range(10)] \
        == [1, -2, 0, 0, 2, 0, 0, 0, 0, -2]
    assert not jtheta(ThetaArg(monomial(1, 0, 1), 1), 12).coeffs
    t = jtheta(ThetaArg(monomial(-1, 2, 0), 2), 4)
    assert t.coeff(0) == ZPoly({0: 1, 2: 1})


def test_jtheta_product_matches_sum_everywhere():
    for sign, zdeg, qdeg, base in REGISTRY_THETA_ARGS:
        arg = ThetaArg(monomial(sign, zdeg, qdeg), base)
        # negative-degree factors cost the product route one certified
        # order per factor, so build with a little slack
        got = jtheta(arg, 64, "sum").truncate(60)
        want = jtheta(arg, 64, "product").truncate(60)
        order, bad = got.first_mismatch(want)
        assert bad is None and order == 60, (sign, zdeg, qdeg, base)


def test_jtheta_x_to_q_over_x_symmetry():
    # j(x;q) = j(q/x;q) at monomial arguments
    for coef, d, base in ((1, 1, 3), (-1, 2, 5), (1, 3, 4)):
        a = theta_sum_scaled(QMono(coef, d), base, 40)
        b = theta_sum_scaled(QMono(Fraction(1, coef), base - d), base, 40)
        _, bad = a.first_mismatch(b)
        assert bad is None


def test_appell_translation_invariance():
    for x, z in ((QMono(1, 3), QMono(2, 0)), (QMono(-1, 1), QMono(3, 0)),
                 (QMono(-1, 2), QMono(Fraction(1, 2), 0)),
                 (QMono(1, 2), QMono(-2, 0)), (QMono(Fraction(2, 3), 1), QMono(5, 0))):
        lhs = appell_m(x, 1, z, 30)
        rhs = appell_m(x, 1, z.qshift(1), 30)
        _, bad = lhs.first_mismatch(rhs)
        assert bad is None


def test_appell_pole_detected():
    # x z = 1 with zero q-degree is the excluded pole
    with pytest.raises(PoleError):
        appell_m(QMono(1, 1), 1, QMono(1, -1), 20)


def test_appell_f8_bridge_example():
    # 2 F4(-1, q) = m(1, q^2, -q)
    from qhecke.mock import F4_series
    lhs = F4_series(30).eval_z(-1).scale(2)
    rhs = appell_m(QMono(1, 0), 2, QMono(-1, 1), 30)
    _, bad = lhs.first_mismatch(rhs)
    assert bad is None


def test_f_abc_brute_force_cross_check():
    # independent double loop over a fixed box
    for a, b, c, x, y in ((1, 2, 1, monomial(1, 0, 3), monomial(1, 0, 4)),
                          (1, 5, 1, monomial(1, 0, 2), monomial(1, 0, 3)),
                          (2, 4, 2, monomial(1, 0, 3), monomial(-1, 0, 4))):
        n = 25
        box = {}
        for r in range(-30, 31):
            for s in range(-30, 31):
                if (r >= 0) != (s >= 0):
                    continue
                e = (a * r * (r - 1) // 2 + b * r * s + c * s * (s - 1) // 2
                     + x.qdeg * r + y.qdeg * s)
                if e > n:
                    continue
                sg = 1 if r >= 0 else -1
                v = sg * (-1) ** ((r + s) % 2) * (x.sign ** (r % 2)) * (y.sign ** (s % 2))
                box[e] = box.get(e, 0) + v
        got = f_abc(a, b, c, x, y, n)
        assert {e: v for e, v in box.items() if v} == dict(got.nonzero_terms())


def test_f_abc_term_pins():
    f = f_abc(1, 2, 1, monomial(1, 0, 1), monomial(1, 0, 1), 6)
    assert f.coeff(0) == 1 and f.coeff(1) == -2
    # the (0,0) term alone contributes +1
    assert any(c == 1 and zd == 0 and qd == 0
               for c, zd, qd in f_abc_terms(1, 2, 1, monomial(1, 0, 1),
                                            monomial(1, 0, 1), 0))


def test_f151_symmetric_in_x_y():
    a = f_abc(1, 5, 1, monomial(1, 0, 2), monomial(1, 0, 3), 30)
    b = f_abc(1, 5, 1, monomial(1, 0, 3), monomial(1, 0, 2), 30)
    _, bad = a.first_mismatch(b)
    assert bad is None


def test_g_abc_single_t_terms_when_a_c_one():
    # for a = c = 1 each t-sum has exactly the t = 0 term; the whole value
    # must then equal f_{1,2,1} at a generic witness
    x, y = monomial(1, 0, 3), monomial(1, 0, 4)
    g = g_abc(1, 2, 1, x, y, QMono(1, 1), QMono(1, -1), 30)
    f = f_abc(1, 2, 1, x, y, 30).over(QQ)
    _, bad = f.first_mismatch(g)
    assert bad is None


def test_theta_1_4_part_sums_are_integral():
    s1, s2 = theta_1_4_parts(monomial(1, 0, 2), monomial(1, 0, 3), 20)
    for series in (s1, s2):
        assert series.coeffs, "part sum should be nonzero"
        for _, coeff in series.nonzero_terms():
            assert Fraction(coeff).denominator == 1


def test_theta_1_4_regression_pin():
    # frozen from the implementation after cross-validation against
    # g_{1,5,1} - f_{1,5,1} (which the printed formula matches up to sign)
    from qhecke.theta import theta_1_4
    th = theta_1_4(monomial(1, 0, 2), monomial(1, 0, 3), 26).truncate(20)
    g = g_abc(1, 5, 1, monomial(1, 0, 2), monomial(1, 0, 3),
              QMono(1, 1), QMono(1, -1), 20)
    f = f_abc(1, 5, 1, monomial(1, 0, 2), monomial(1, 0, 3), 20).over(QQ)
    _, bad = th.first_mismatch(f - g)
    assert bad is None, "printed correction agrees with f - g (sign-flipped identity)"
    pinned = [1, 0, -2, -1, 0, 1, 1, 2, 0, -1, 1, -1, -1, -1, 1, 0, -1, 1, 0, -1, 0]
    assert [th.coeff(e) for e in range(21)] == pinned


def test_appell_x_inverse_at_base_two():
    # m(x, q^2, z) = x^-1 m(x^-1, q^2, z^-1) at x = -q, z = 2
    x, z = QMono(-1, 1), QMono(2, 0)
    lhs = appell_m(x, 2, z, 30)
    rhs = appell_m(x.inv(), 2, z.inv(), 30).shift(x.inv().coef, x.inv().qdeg)
    _, bad = lhs.first_mismatch(rhs)
    assert bad is None
