from fractions import Fraction

import pytest
from hypothesis import given

from kzduality.linalg import EliminationError, bareiss_echelon, nullspace_vector
from kzduality.ratfunc import ONE, Q, T, ZERO, PoleOrderExceeded, RatFunc
from kzduality.zpoly import ZPoly, coeff_p_poly, extract_z_coefficient
from strategies import ratfunc, zpoly

f02 = ZPoly(2, {(0, 2): ONE, (1, 1): (ONE - T) / (ONE - Q * T)})


def test_coeff_p_poly_examples():
    assert coeff_p_poly(f02, 1, 1) == ZPoly.monomial((1, 1), ONE - T)
    z1 = ZPoly.variable(1, 2)
    assert coeff_p_poly(z1, 1, 1).is_zero()
    assert coeff_p_poly(z1, 1, 0) == z1


def test_coeff_p_poly_propagates_pole_errors():
    g = ZPoly(2, {(1, 0): ONE / (ONE - Q * T) ** 2})
    with pytest.raises(PoleOrderExceeded):
        coeff_p_poly(g, 1, 1)


def test_extract_examples():
    e10 = ZPoly(2, {(1, 0): ONE, (0, 1): Q * (ONE - T) / (ONE - Q * T)})
    assert extract_z_coefficient(e10, (0, 1)) == Q * (ONE - T) / (ONE - Q * T)
    assert extract_z_coefficient(ZPoly.variable(1, 2), (1, 0)) == ONE
    assert extract_z_coefficient(ZPoly.variable(1, 2), (0, 2)) == ZERO


def test_wrong_length_rejected():
    with pytest.raises(ValueError):
        ZPoly(2, {(1, 0, 0): ONE})


@given(zpoly(3), zpoly(3), zpoly(3))
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZPoly.zero(3)


@given(zpoly(2))
def test_evaluate_matches_terms(f):
    z, q, t = (Fraction(2), Fraction(-3, 5)), Fraction(1, 3), Fraction(7, 2)
    direct = sum((c.evaluate(q, t) * z[0] ** e[0] * z[1] ** e[1] for e, c in f.terms.items()),
                 Fraction(0))
    assert f.evaluate(z, q, t) == direct


def test_str_sorted_and_named():
    assert str(f02) == "((1-t)/(1-q*t))*z1*z2 + z2^2"


def test_bareiss_kernel():
    # kernel of [[1, -q], [t, -q t]] is spanned by (q, 1)
    rows = [[ONE, -Q], [T, -Q * T]]
    x = nullspace_vector(rows, 1)
    assert x == [Q, ONE]
    M, piv = bareiss_echelon([[ONE, ONE / (ONE - Q)], [T, ZERO]])
    assert piv == [0, 1]
    with pytest.raises(EliminationError):
        nullspace_vector([[ONE, ZERO], [ZERO, ONE]], 0)


@given(ratfunc(nonzero=True), ratfunc(nonzero=True))
def test_bareiss_rank_one_kernel(a, b):
    x = nullspace_vector([[a, b]], 1)
    assert a * x[0] + b * x[1] == ZERO
