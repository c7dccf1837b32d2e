"""Core series engine tests.

Expected values marked as oracle-derived are recomputed here with naive
dict-based polynomial arithmetic that shares no code with the package.
"""

import random
from fractions import Fraction

import pytest

from qhecke.errors import NonUnitError, RingMismatchError
from qhecke.rings import QQ, QQI, ZPOLY, ZZ, GaussianRational, ZPoly
from qhecke.series import (INF, QSeries, dissect, eta_quotient, etaq, geom_ratio,
                           monomial, pochhammer, series_arith, series_invert, u_p)


# -- naive oracle helpers (independent of the package internals) ------------

def naive_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def naive_eta(k, n):
    out = {0: 1}
    m = 1
    while k * m <= n:
        out = naive_mul(out, {0: 1, k * m: -1})
        out = {e: c for e, c in out.items() if e <= n}
        m += 1
    return out


def naive_partitions(n):
    # count partitions of n by exhaustive recursion
    def count(n, maxp):
        if n == 0:
            return 1
        return sum(count(n - p, p) for p in range(min(n, maxp), 0, -1))
    return count(n, n)


def as_dict(series):
    return dict(series.nonzero_terms())


def rand_series(rng, ring, n, min_exp=-3):
    coeffs = [ring.from_int(rng.randint(-4, 4)) for _ in range(n - min_exp + 1)]
    return QSeries.from_coeffs(ring, min_exp, coeffs, n)


# -- arithmetic --------------------------------------------------------------

def test_add_cancellation():
    f = QSeries.from_coeffs(ZZ, 0, [1, 1], INF)
    g = QSeries.from_coeffs(ZZ, 0, [1, -1], INF)
    assert as_dict(f + g) == {0: 2}


def test_mul_telescoping():
    g = QSeries.from_coeffs(ZZ, 0, [1, -1], INF)
    h = QSeries.from_coeffs(ZZ, 0, [1, 1, 1, 1], INF)
    assert as_dict(g * h) == {0: 1, 4: -1}
    assert as_dict((g * h).truncate(3)) == {0: 1}


def test_monomial_shift():
    f = QSeries.from_coeffs(ZZ, 1, [1, 1], INF)  # q + q^2
    assert as_dict(QSeries.monomial(ZZ, 1, -1) * f) == {0: 1, 1: 1}


def test_series_arith_dispatch():
    f = QSeries.from_coeffs(ZZ, 0, [1, 2], 5)
    g = QSeries.from_coeffs(ZZ, 0, [0, 1], 5)
    assert as_dict(series_arith(f, g, "add")) == {0: 1, 1: 3}
    assert as_dict(series_arith(f, g, "sub")) == {0: 1, 1: 1}
    assert as_dict(series_arith(f, g, "mul")) == {1: 1, 2: 2}
    assert as_dict(series_arith(f, None, "neg")) == {0: -1, 1: -2}
    assert as_dict(series_arith(f, None, "scale", scalar=3)) == {0: 3, 1: 6}


def test_ring_mismatch_raises():
    f = QSeries.from_coeffs(ZZ, 0, [1], 5)
    g = QSeries.from_coeffs(QQ, 0, [1], 5)
    with pytest.raises(RingMismatchError):
        f + g


def test_order_propagation_mul():
    f = QSeries.from_coeffs(ZZ, 0, [1, 1], 4)   # known through q^4
    g = QSeries.from_coeffs(ZZ, 2, [1], 6)      # q^2, known through q^6
    assert (f * g).order == 6                    # min(4+2, 6+0)
    assert (f + g).order == 4


def test_ring_axioms_randomized():
    rng = random.Random(20240811)
    for ring in (ZZ, QQ, QQI, ZPOLY):
        for _ in range(12):
            a = rand_series(rng, ring, 30)
            b = rand_series(rng, ring, 30)
            c = rand_series(rng, ring, 30)
            assert (a + b).same(b + a)
            assert ((a + b) + c).same(a + (b + c))
            _, bad = (a * b).first_mismatch(b * a)
            assert bad is None
            _, bad = (a * (b + c)).first_mismatch(a * b + a * c)
            assert bad is None


# -- inversion ---------------------------------------------------------------

def test_invert_geometric():
    f = QSeries.from_coeffs(ZZ, 0, [1, -1], 10)
    assert as_dict(f.invert()) == {e: 1 for e in range(11)}


def test_invert_partition_oracle():
    inv = series_invert(etaq(1, 5))
    expected = [1, 1, 2, 3, 5, 7]
    assert [inv.coeff(e) for e in range(6)] == expected
    assert expected == [naive_partitions(n) for n in range(6)]


def test_invert_nonunit_over_zz():
    f = QSeries.from_coeffs(ZZ, 0, [2, 1], 10)
    with pytest.raises(NonUnitError):
        f.invert()
    assert f.over(QQ).invert().coeff(0) == Fraction(1, 2)


def test_invert_round_trip_randomized():
    rng = random.Random(99)
    for _ in range(50):
        ring = rng.choice((ZZ, QQ))
        n = rng.randint(5, 25)
        min_exp = rng.randint(-4, 3)
        coeffs = [rng.choice((1, -1))] + [rng.randint(-3, 3) for _ in range(n - min_exp)]
        f = QSeries.from_coeffs(ring, min_exp, coeffs, n)
        g = f * f.invert()
        lo = min(g.effective_min(), 0)
        assert all(g.coeff(e) == (1 if e == 0 else 0)
                   for e in range(lo, g.order + 1))


def test_invert_zero_window_raises():
    with pytest.raises(NonUnitError):
        QSeries.zero(ZZ, 10).invert()


def test_invert_negative_valuation_gains_order():
    # f = q^-1 (1 - q): inverse q/(1-q) is certified beyond f's own order
    f = QSeries.from_coeffs(ZZ, -1, [1, -1], 8)
    inv = f.invert()
    assert inv.min_exp == 1 and inv.order == 10
    assert all(inv.coeff(e) == 1 for e in range(1, 11))


# -- pochhammer / eta ---------------------------------------------------------

def test_pochhammer_finite():
    got = pochhammer(monomial(1, 0, 1), 1, 2, 10)
    assert as_dict(got) == {0: 1, 1: -1, 2: -1, 3: 1}
    assert as_dict(pochhammer(monomial(-1, 0, 1), 2, 1, 10)) == {0: 1, 1: 1}


def test_pochhammer_bivariate():
    got = (pochhammer(monomial(1, 1, 1), 2, 1, 10)
           * pochhammer(monomial(1, -1, 1), 2, 1, 10))
    assert got.coeff(0) == ZPoly.const(1)
    assert got.coeff(1) == ZPoly({1: -1, -1: -1})
    assert got.coeff(2) == ZPoly.const(1)


def test_pochhammer_consistency():
    # (x; q)_{n+1} = (x; q)_n (1 - x q^n)
    x = monomial(-1, 0, 2)
    for n in range(21):
        lhs = pochhammer(x, 3, n + 1, 40)
        rhs = pochhammer(x, 3, n, 40).mul_one_minus(-1, 2 + 3 * n)
        _, bad = lhs.first_mismatch(rhs)
        assert bad is None


def test_etaq_pins_match_naive_oracle():
    for k, n in ((1, 7), (2, 5), (1, 0), (3, 17)):
        assert as_dict(etaq(k, n)) == naive_eta(k, n)


def test_eta_quotient_is_cached_but_exact():
    a = eta_quotient({1: 2, 2: -1}, 25)
    b = naive_mul(naive_eta(1, 25), naive_eta(1, 25))
    inv2 = as_dict(etaq(2, 25).invert())
    b = {e: c for e, c in naive_mul(b, inv2).items() if e <= 25}
    assert as_dict(a) == b


# -- restructuring ------------------------------------------------------------

def test_u_p_examples():
    f = QSeries.from_coeffs(ZZ, 0, [1, 2, 3, 4], 3)
    assert as_dict(u_p(f, 2)) == {0: 1, 1: 3}
    assert u_p(f, 1) is f


def test_dissect_geometric():
    f = QSeries.from_coeffs(ZZ, 0, [1] * 11, 10)
    parts = dissect(f, 2)
    assert as_dict(parts[0]) == {e: 1 for e in range(6)}
    assert as_dict(parts[1]) == {e: 1 for e in range(5)}


def test_dissect_reassembles_randomized():
    rng = random.Random(5)
    for p in (2, 3, 5):
        for _ in range(10):
            f = rand_series(rng, ZZ, 24)
            back = QSeries.zero(ZZ, f.order)
            for i, comp in enumerate(dissect(f, p)):
                back = back + comp.inflate(p).shift(1, i)
            _, bad = back.first_mismatch(f)
            assert bad is None
            _, bad = u_p(f, p).first_mismatch(dissect(f, p)[0])
            assert bad is None


def test_inflate_and_alternate():
    f = QSeries.from_coeffs(ZZ, -1, [1, 0, 3], 4)
    assert as_dict(f.inflate(2)) == {-2: 1, 2: 3}
    assert f.inflate(2).order == 9
    assert as_dict(f.alternate()) == {-1: -1, 1: -3}


# -- geom_ratio ----------------------------------------------------------------

def test_geom_ratio_examples():
    assert geom_ratio(0, 1) == ZPoly.const(1)
    assert geom_ratio(-1, 2) == ZPoly({-1: 1, 0: 1, 1: 1})
    assert geom_ratio(2, -2) == ZPoly({-2: -1, -1: -1, 0: -1, 1: -1})
    assert geom_ratio(3, 3) == ZPoly({})


def test_geom_ratio_defining_identity():
    one_minus_z = ZPoly({0: 1, 1: -1})
    for a in range(-6, 7):
        for b in range(-6, 7):
            g = geom_ratio(a, b)
            assert one_minus_z * g == ZPoly({a: 1}) - ZPoly({b: 1})
            assert g.at_one() == b - a


# -- z evaluation ---------------------------------------------------------------

def test_eval_z_scalars():
    f = QSeries.from_terms(ZPOLY, [(0, ZPoly({1: 1, -1: 1}))], 5)
    assert f.eval_z(1).coeff(0) == 2
    assert f.eval_z(Fraction(1, 2)).coeff(0) == Fraction(5, 2)
    g = f.eval_z(GaussianRational(0, 1))
    assert g.coeff(0) == GaussianRational(0, 0)  # i + 1/i = 0


def test_eval_z_rejects_zero():
    f = QSeries.from_terms(ZPOLY, [(0, ZPoly({1: 1}))], 5)
    with pytest.raises(ZeroDivisionError):
        f.eval_z(0)


# -- comparison and serialization ------------------------------------------------

def test_first_mismatch_reports_certified_order():
    f = QSeries.from_coeffs(ZZ, 0, [1, 2, 3], 9)
    g = QSeries.from_coeffs(ZZ, 0, [1, 2, 3], 5)
    order, bad = f.first_mismatch(g)
    assert order == 5 and bad is None
    h = QSeries.from_coeffs(ZZ, 0, [1, 2, 4], 5)
    order, bad = f.first_mismatch(h)
    assert bad == (2, 3, 4)


def test_coeff_beyond_order_raises():
    f = QSeries.from_coeffs(ZZ, 0, [1], 3)
    assert f.coeff(3) == 0
    with pytest.raises(ValueError):
        f.coeff(4)


def test_json_shapes():
    f = QSeries.from_coeffs(QQ, -1, [Fraction(1, 2), 0, 3], 4)
    js = f.to_json()
    assert js["min_exp"] == -1 and js["order"] == 4
    assert js["coeffs"] == ["1/2", "0", "3"]
    g = QSeries.from_terms(QQI, [(0, GaussianRational(Fraction(1, 2), Fraction(-3, 4)))], 2)
    assert g.to_json()["coeffs"][0] == "1/2-3/4*i"
    h = QSeries.from_terms(ZPOLY, [(1, ZPoly({-1: 1, 2: Fraction(2, 3)}))], 2)
    assert h.to_json()["coeffs"][0] == {"-1": "1", "2": "2/3"}


def test_pochhammer_step_must_be_positive():
    with pytest.raises(ValueError):
        pochhammer(monomial(1, 0, 1), 0, 3, 10)


def test_alternate_on_bivariate_series():
    from qhecke.mock import F4_series
    f = F4_series(6)
    g = f.alternate()
    for e in range(1, 7):
        want = f.coeff(e) * (-1 if e % 2 else 1)
        assert g.coeff(e) == want
