import pytest

from kzduality.asep_poly import asep_polynomial
from kzduality.combinatorics import compositions_up_to, lower_set, monomial_cone
from kzduality.macdonald import (MonomialCone, exchange_step_E, expand_E_in_f, expand_f_in_E,
                                 nonsymmetric_macdonald, transition_matrices,
                                 verify_eigen, verify_transition_inverse)
from kzduality.ratfunc import ONE, Q, T
from kzduality.zpoly import ZPoly

E10 = ZPoly(2, {(1, 0): ONE, (0, 1): Q * (ONE - T) / (ONE - Q * T)})


def test_cone_examples():
    assert set(monomial_cone((1, 0))) == {(1, 0), (0, 1)}
    assert set(monomial_cone((2, 0))) == {(2, 0), (0, 2), (1, 1)}
    assert monomial_cone((1, 1)) == ((1, 1),)
    cone = MonomialCone.of((0, 1, 2))
    assert cone.basis[-1] == (2, 1, 0) and len(cone.basis) == 7


def test_small_E():
    assert nonsymmetric_macdonald((0, 0, 0)) == ZPoly.one(3)
    assert nonsymmetric_macdonald((0, 1)) == ZPoly.variable(2, 2)
    assert nonsymmetric_macdonald((1, 0)) == E10


@pytest.mark.parametrize("mu", [(1, 0), (0, 2), (2, 1, 0), (0, 1, 2), (1, 0, 1), (2, 0, 2), (0, 1, 0, 1)])
def test_bareiss_agrees(mu):
    assert nonsymmetric_macdonald(mu, "bareiss") == nonsymmetric_macdonald(mu)


def test_eigen_spot_checks_n4():
    for mu in [(0, 1, 0, 1), (1, 0, 0, 0), (0, 0, 1, 1), (2, 0, 0, 0)]:
        rep = verify_eigen(nonsymmetric_macdonald(mu), mu)
        assert rep.passed, rep.failures


def test_exchange_step_examples():
    assert exchange_step_E(ZPoly.variable(2, 2), (0, 1), 1) == E10
    assert exchange_step_E(nonsymmetric_macdonald((0, 2)), (0, 2), 1) == nonsymmetric_macdonald((2, 0))
    with pytest.raises(ValueError):
        exchange_step_E(ZPoly.one(2), (0, 0), 1)


def test_exchange_step_literal_scalar_is_off_by_t():
    """The scalar with ratio y_{i+1}/y_i alone does not give E_{s_i mu}."""
    assert exchange_step_E(ZPoly.variable(2, 2), (0, 1), 1, literal=True) != E10


def test_pole_structure():
    """Every denominator factor of E_mu is of the form 1 - q^a t^b with a, b >= 1."""
    for n in (2, 3):
        for mu in compositions_up_to(n, 3):
            for c in nonsymmetric_macdonald(mu).terms.values():
                _, factors = c.den.factor()
                for f, _ in factors:
                    terms = f.to_dict()
                    assert len(terms) == 2 and terms.get((0, 0)) in (1, -1), str(f)
                    (a, b), = [k for k in terms if k != (0, 0)]
                    assert a >= 1 and b >= 1


def test_E_expansions():
    assert expand_E_in_f((0, 1, 2), asep_polynomial) == {(0, 1, 2): ONE}
    c = expand_E_in_f((1, 0), asep_polynomial)
    assert c == {(1, 0): ONE, (0, 1): Q * (ONE - T) / (ONE - Q * T)}
    d = expand_f_in_E((1, 0), asep_polynomial)
    assert d[(1, 0)] == ONE and d[(0, 1)] == -c[(0, 1)]


@pytest.mark.parametrize("delta", [(0, 1, 2), (0, 0, 1), (0, 1, 1, 2)])
def test_transition_matrices_inverse(delta):
    rep = verify_transition_inverse(delta, asep_polynomial)
    assert rep.passed, rep.failures
    sec, c, d = transition_matrices(delta, asep_polynomial)
    for (mu, nu) in c:
        assert mu == nu or nu in lower_set(mu)
    assert all(c[mu, mu] == ONE and d[mu, mu] == ONE for mu in sec)
