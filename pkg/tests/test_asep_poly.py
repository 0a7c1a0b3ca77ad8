import pytest

from kzduality.asep_poly import (asep_polynomial, boson_normal_form, boson_trace, coefficient_Cj,
                                 f_delta_rank2_closed, f_delta_sum_rank_r, mpa_f_rank2, mpa_f_rank_r,
                                 verify_cyclic, verify_exchange, verify_path_independence)
from kzduality.combinatorics import sector
from kzduality.ratfunc import ONE, Q, T, ZERO
from kzduality.tboson import PHI, PHIDAG
from kzduality.zpoly import ZPoly

f02 = ZPoly(2, {(0, 2): ONE, (1, 1): (ONE - T) / (ONE - Q * T)})


def test_examples():
    assert asep_polynomial((1, 0, 1)) == ZPoly.monomial((1, 0, 1))
    assert asep_polynomial((1, 2)) == ZPoly.monomial((1, 2))
    assert asep_polynomial((2, 1)) == ZPoly.monomial((2, 1))
    assert asep_polynomial((0, 2)) == f02


@pytest.mark.parametrize("delta", [(0, 1, 2), (0, 0, 2, 2), (0, 1, 1, 2)])
def test_exchange(delta):
    rep = verify_exchange(delta)
    assert rep.passed, rep.failures


def test_exchange_detects_dropped_term():
    def broken(mu):
        f = asep_polynomial(mu)
        if mu == (1, 0, 2):
            f = ZPoly(3, {e: c for e, c in f.terms.items() if e != (1, 1, 1)})
        return f
    rep = verify_exchange((0, 1, 2), f=broken)
    assert not rep.passed and rep.failures


@pytest.mark.parametrize("mu", [(0, 1), (1, 2), (0, 0), (2, 0, 1), (0, 2, 1, 2)])
def test_cyclic(mu):
    assert verify_cyclic(mu).passed


def test_path_independence():
    for mu in sector((0, 1, 2, 2)):
        assert verify_path_independence(mu).passed


def test_boson_api():
    assert boson_normal_form([PHI, PHIDAG]) == {(0, 0, 0): ONE, (0, 1, 0): -T}
    assert boson_trace(boson_normal_form([])) == ONE / (ONE - Q)


def test_mpa_examples():
    assert mpa_f_rank2((0, 2)) == f02
    assert mpa_f_rank2((1, 1)) == ZPoly.monomial((1, 1))
    assert mpa_f_rank2((0, 0, 0)) == ZPoly.one(3)
    assert mpa_f_rank_r((0, 2)) == mpa_f_rank2((0, 2))
    assert mpa_f_rank_r((0, 0, 3)) == asep_polynomial((0, 0, 3))


def test_Cj_examples():
    for j in (1, 2):
        assert coefficient_Cj((0, 0), (0, 0), j) == ONE / (ONE - Q ** j)
        assert coefficient_Cj((1, 0), (0, 1), j) == ONE / (ONE - Q ** j) - ONE / (ONE - Q ** j * T)
        assert coefficient_Cj((1, 0), (0, 0), j) == ZERO


def test_Cj_denominators_clear():
    """C_j times prod_{i<=m} (1 - q^j t^i) is a polynomial."""
    from itertools import product
    for n in (2, 3):
        for alpha, beta in product(product((0, 1), repeat=n), repeat=2):
            m = sum(alpha)
            if sum(beta) != m:
                continue
            for j in (1, 2):
                c = coefficient_Cj(alpha, beta, j)
                for i in range(m + 1):
                    c = c * (ONE - Q ** j * T ** i)
                assert c.is_laurent()


def test_sum_formula_examples():
    assert f_delta_sum_rank_r((0, 2)) == f02
    assert f_delta_sum_rank_r((0, 3)) == asep_polynomial((0, 3))


def test_closed_examples():
    assert f_delta_rank2_closed(2, 1, 1) == ZPoly.monomial((1, 2))
    assert f_delta_rank2_closed(2, 0, 1) == f02
    assert f_delta_rank2_closed(3, 0, 0) == ZPoly.one(3)


def test_three_way_agreement_n4():
    for delta in [(0, 0, 1, 2), (0, 1, 2, 2), (0, 0, 0, 2)]:
        closed = f_delta_rank2_closed(4, delta.count(1), delta.count(2))
        assert closed == asep_polynomial(delta) == mpa_f_rank2(delta)
