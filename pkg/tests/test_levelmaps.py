from fractions import Fraction

import pytest

from tmf3.multipoly import LocElem, MultiPoly, a1, a3, disc_factor
from tmf3.levelmaps import (LevelOneForm, F4, F6, FDELTA, Q4, Q6, QDELTA,
                            T_A, T_B, T_C, fstar, qstar, hstar, tstar,
                            delta_map, is_gamma03, cochain_D0, cochain_D1,
                            basis_monomials, val2_delta_c4pow, val_delta_c4c6,
                            delta_mod2_Delta_pow, lemma_binomial_check)


C4 = LevelOneForm.c4()
C6 = LevelOneForm.c6()
DELTA = LevelOneForm.delta()


def test_level_one_relation():
    assert C6 * C6 == C4 ** 3 - 1728 * DELTA
    assert (C4 ** 3 - C6 ** 2 - 1728 * DELTA).is_zero()


def test_level_one_weights_and_text():
    assert (C4 * C6 * DELTA).weight_of() == 22
    assert (2 * C4 - C4 - C4).is_zero()
    assert (Fraction(1, 3) * C4).to_text() == "1/3*c4"


def test_fstar_formulas():
    assert (F4 - (a1() ** 4 - 24 * a1() * a3())).is_zero()
    assert (F6 - (-a1() ** 6 + 36 * a1() ** 3 * a3()
                  - 216 * a3() ** 2)).is_zero()
    assert (FDELTA - a3() ** 3 * disc_factor()).is_zero()


def test_qstar_formulas():
    assert (Q4 - (a1() ** 4 + 216 * a1() * a3())).is_zero()
    assert (Q6 - (-a1() ** 6 + 540 * a1() ** 3 * a3()
                  + 5832 * a3() ** 2)).is_zero()
    assert (QDELTA - a3() * disc_factor() ** 3).is_zero()


def test_tstar_generator_formulas():
    assert (T_A - (-3 * a1() ** 2)).is_zero()
    assert (T_B - (Fraction(1, 3) * a1() ** 4 - 9 * a1() * a3())).is_zero()
    assert (T_C - (Fraction(-1, 27) * a1() ** 6 + 2 * a1() ** 3 * a3()
                   - 27 * a3() ** 2)).is_zero()


def test_hstar_is_three_to_the_weight():
    for g, w in ((C4, 4), (C6, 6), (DELTA, 12), (C4 * DELTA, 16)):
        assert hstar(g) == 3 ** w * g
    assert hstar(LevelOneForm.delta(-1)) == Fraction(1, 3 ** 12) * LevelOneForm.delta(-1)


def test_maps_respect_weights():
    for g in (C4, C6, DELTA, C4 * C6, LevelOneForm.delta(-1)):
        w = g.weight_of()
        assert fstar(g).weight_of() == w
        assert qstar(g).weight_of() == w
        assert tstar(fstar(g)).weight_of() == w


def test_cosimplicial_identities_on_generators():
    for g in (C4, C6, DELTA, LevelOneForm.delta(-1)):
        assert tstar(fstar(g)) == qstar(g)
        assert tstar(qstar(g)) == fstar(hstar(g))


def test_tstar_squared_is_three_to_the_weight():
    for g in (fstar(C4), qstar(C6), fstar(DELTA), fstar(LevelOneForm.delta(-1))):
        w = g.weight_of()
        expected = (Fraction(3) ** w) * g
        assert tstar(tstar(g)) == expected


def test_is_gamma03():
    assert is_gamma03(fstar(C4))
    assert is_gamma03(tstar(LocElem(a1() * a3())))
    assert not is_gamma03(LocElem(a1()))


def test_delta_map_on_c4():
    g = delta_map(C4)
    assert g == LocElem(240 * a1() * a3())


def test_cochain_composition_vanishes():
    for m in (C4, C6, DELTA, C4 * C6, LevelOneForm.delta(-1), C4 ** 2 * DELTA):
        u, v = cochain_D0(m)
        assert cochain_D1(u, v).is_zero()


def test_basis_monomials_bounds():
    mons = basis_monomials(24, d_range=(-2, 2))
    assert mons
    for m in mons:
        assert m.weight_of() <= 24


def test_val2_examples():
    r = val2_delta_c4pow(1)
    assert r["pass"] and r["valuation"] == 4
    r = val2_delta_c4pow(2)
    assert r["pass"] and r["valuation"] == 5
    r = val2_delta_c4pow(8)
    assert r["pass"] and r["valuation"] == 7


def test_val_c4c6_examples():
    for k in (0, 1, 5):
        r = val_delta_c4c6(k)
        assert r["pass"] and r["valuation"] == 3


def test_mod2_delta_power_examples():
    r = delta_mod2_Delta_pow(1)
    assert r["pass"] and r["leading_term"] == "a1^6*a3^2"
    r = delta_mod2_Delta_pow(2)
    assert r["pass"] and r["leading_term"] == "a1^12*a3^4"


def test_binomial_lemma_examples():
    for d in (2, 4):
        for k in (1, 2, 6):
            assert lemma_binomial_check(d, k)["pass"]
    with pytest.raises(ValueError):
        lemma_binomial_check(1, 3)
