from fractions import Fraction

import pytest

from tmf3.qexp import (QSeries, eisenstein_G, eisenstein_in_c4c6, series_c4,
                       series_c6, series_delta, e_alpha)
from tmf3.levelmaps import LevelOneForm, cochain_D1
from tmf3.multipoly import LocElem, MultiPoly


def test_series_arithmetic():
    q = QSeries.q(10)
    s = (1 + q) * (1 - q)
    assert s == 1 - q ** 2
    assert (s - s).is_zero()
    inv = (1 - q).inverse()
    assert inv.coeffs[:4] == [1, 1, 1, 1]


def test_inverse_requires_unit():
    with pytest.raises(ZeroDivisionError):
        QSeries.q(5).inverse()


def test_known_coefficients():
    c4 = series_c4(6)
    assert c4.coeffs[:3] == [1, 240, 2160]
    c6 = series_c6(6)
    assert c6.coeffs[:3] == [1, -504, -16632]
    d = series_delta(8)
    assert d.coeffs[:5] == [0, 1, -24, 252, -1472]


def test_c4_cubed_identity_as_series():
    prec = 50
    lhs = series_c4(prec) ** 3 - series_c6(prec) ** 2
    assert lhs == 1728 * series_delta(prec)


def test_eisenstein_constant_terms():
    assert eisenstein_G(4, 5).coeffs[0] == Fraction(1, 240)
    assert eisenstein_G(6, 5).coeffs[0] == Fraction(-1, 504)
    assert eisenstein_G(4, 5).coeffs[1] == 1


def test_g4_is_c4_over_240():
    assert eisenstein_in_c4c6(4) == {(1, 0, 0): Fraction(1, 240)}


def test_g6_is_minus_c6_over_504():
    assert eisenstein_in_c4c6(6) == {(0, 1, 0): Fraction(-1, 504)}


def test_higher_weight_expression_matches_expansion():
    for k in (8, 10, 12, 14, 26):
        expr = eisenstein_in_c4c6(k)
        prec = len(expr) + 25
        c4, c6, d = series_c4(prec), series_c6(prec), series_delta(prec)
        total = QSeries.zero(prec)
        for (ca, eps, dd), c in expr.items():
            s = c4 ** ca
            if eps:
                s = s * c6
            total = total + c * (s * d ** dd)
        assert total == eisenstein_G(k, prec)


def test_e_alpha_weight_four():
    u, v = e_alpha(4)
    assert u == LocElem(MultiPoly({(1, 1): Fraction(1)}))
    assert v == Fraction(1, 3) * LevelOneForm.c4()


def test_e_alpha_cocycles():
    for k in (4, 6, 8, 10, 12):
        assert cochain_D1(*e_alpha(k)).is_zero()
