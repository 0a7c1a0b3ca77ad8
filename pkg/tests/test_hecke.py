import random

import pytest
from hypothesis import given, strategies as st

from kzduality.combinatorics import compositions_up_to, dominant, dominates
from kzduality.hecke import (HeckeOp, L_op, apply, cherednik_Y, corrupted_T, hecke_T, hecke_T_inv,
                             hecke_T_inv_direct, omega, omega_inv, op, random_poly,
                             verify_hecke_relations)
from kzduality.ratfunc import ONE, Q, T
from kzduality.zpoly import ZPoly
from strategies import zpoly

z = lambda i, n: ZPoly.variable(i, n)


def test_T_on_variables():
    assert hecke_T(z(1, 2), 1) == z(2, 2)
    assert hecke_T(z(2, 2), 1) == z(2, 2).scale(T - 1) + z(1, 2).scale(T)


def test_T_on_symmetric():
    g = z(1, 3) * z(2, 3) + z(1, 3) + z(2, 3) + z(3, 3) * z(3, 3)
    assert hecke_T(g, 1) == g.scale(T)
    assert L_op(g, 1).is_zero()


def test_L_examples():
    assert L_op(z(1, 2), 1) == z(2, 2) - z(1, 2).scale(T)
    assert L_op(z(2, 2), 1) == z(1, 2).scale(T) - z(2, 2)


def test_omega_and_Y_examples():
    f = ZPoly.monomial((1, 3))
    assert omega(f) == ZPoly.monomial((3, 1), Q)
    assert omega_inv(omega(f)) == f
    for n in (2, 3, 4):
        assert cherednik_Y(ZPoly.one(n), 1) == ZPoly.one(n).scale(T ** (n - 1))


def test_heckeop_composition():
    n = 3
    word = op(n, "T", 1) @ op(n, "Tinv", 1)
    f = ZPoly.monomial((2, 0, 1))
    assert apply(word, f) == f
    with pytest.raises(ValueError):
        apply(word, ZPoly.one(2))


@pytest.mark.parametrize("n", [2, 3])
def test_relations_full_basis(n):
    rep = verify_hecke_relations(n, degree=3)
    assert rep.passed, rep.failures


def test_relations_random_dense():
    rep = verify_hecke_relations(4, degree=2, samples=5, seed=11, check_Y=False)
    assert rep.passed, rep.failures


def test_corrupted_T_fails_with_witness():
    rep = verify_hecke_relations(3, degree=2, T_impl=corrupted_T)
    assert not rep.passed
    assert rep.failures and rep.failures[0][0] in ("quadratic", "inverse", "braid")


@given(zpoly(3, 3), st.sampled_from([1, 2]))
def test_inverse_forms_agree(f, i):
    assert hecke_T_inv(f, i) == hecke_T_inv_direct(f, i)
    assert hecke_T(hecke_T_inv(f, i), i) == f


@given(zpoly(3, 3), st.sampled_from([1, 2]))
def test_degree_preserved(f, i):
    for g in (hecke_T(f, i), omega(f), cherednik_Y(f, i)):
        assert all(sum(e) in {sum(x) for x in f.terms} for e in g.terms)


def test_stability_of_cones():
    for n in range(2, 5):
        for lam in compositions_up_to(n, 4 if n < 4 else 3):
            if lam != dominant(lam):
                continue
            f = ZPoly.monomial(tuple(reversed(lam)))
            imgs = [hecke_T(f, i) for i in range(1, n)] + [cherednik_Y(f, i) for i in range(1, n + 1)]
            for g in imgs:
                assert all(dominates(lam, dominant(e)) for e in g.terms)


def test_random_poly_is_seeded():
    a = random_poly(3, 3, random.Random(5))
    b = random_poly(3, 3, random.Random(5))
    assert a == b
