"""qhecke: exact q-series toolkit and identity verification harness.

Computes Hurwitz class numbers from reduced binary quadratic forms,
builds their generating functions alongside the classical mock theta
functions A, V1, sigma and phi-, evaluates theta functions, Appell-Lerch
sums and Hecke-Rogers indefinite theta series in exact arithmetic, and
machine-verifies a registry of identities relating all of them to a
configurable truncation order.
"""

from .rings import QQ, QQI, ZPOLY, ZZ, GaussianRational, ZPoly, I
from .series import (
    INF,
    QSeries,
    SignedMonomial,
    dissect,
    eta_quotient,
    etaq,
    eval_z,
    geom_ratio,
    monomial,
    pochhammer,
    series_arith,
    series_invert,
    u_p,
)
from .jets import Jet1, jet_arith, jet_of_termsum
from .theta import ThetaArg, appell_m, f_abc, g_abc, jtheta, theta_1_4
from .classnum import genfun_F, genfun_H, hurwitz, hurwitz12, kronecker_F
from .mock import (F4_series, F8_series, appell_rhs, eulerian, hecke_rogers,
                   humbert_series, kronecker_minus4)
from .combinat import P_series, Q_series, count_P, count_Q, list_P, list_Q
from .oeis import oeis_compare
from .verify import appell_relation_check, verify

__all__ = [
    "QQ", "QQI", "ZPOLY", "ZZ", "GaussianRational", "ZPoly", "I",
    "INF", "QSeries", "SignedMonomial", "dissect", "eta_quotient", "etaq",
    "eval_z", "geom_ratio", "monomial", "pochhammer", "series_arith",
    "series_invert", "u_p",
    "Jet1", "jet_arith", "jet_of_termsum",
    "ThetaArg", "appell_m", "f_abc", "g_abc", "jtheta", "theta_1_4",
    "genfun_F", "genfun_H", "hurwitz", "hurwitz12", "kronecker_F",
    "F4_series", "F8_series", "appell_rhs", "eulerian", "hecke_rogers",
    "humbert_series", "kronecker_minus4",
    "P_series", "Q_series", "count_P", "count_Q", "list_P", "list_Q",
    "oeis_compare", "appell_relation_check", "verify",
]

__version__ = "0.1.0"
