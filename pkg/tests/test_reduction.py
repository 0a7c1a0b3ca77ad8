from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kzduality.combinatorics import positions, sector
from kzduality.ratfunc import ONE, T, ZERO, PoleOrderExceeded, t_pow
from kzduality.reduction import (H_observable, NonzeroResidual, conjecture_probe, d_rank_two,
                                 exponent_identity, psi_positions, psi_rank1, psi_rank2, psi_table,
                                 reduce_expand, specialize, verify_exponent_identity,
                                 verify_psi_vs_positions)
from kzduality.asep_poly import asep_polynomial


def test_reduce_examples():
    assert reduce_expand((0, 2), 1) == {(1, 1): ONE - T}
    out = reduce_expand((0, 0, 2), 1)
    d = ONE / T - ONE
    assert out == {(0, 1, 1): d * T, (1, 0, 1): d * T, (1, 1, 0): ZERO}
    assert reduce_expand((0, 0), 1) == {}


def test_reduce_leaving_sector_raises():
    with pytest.raises(NonzeroResidual):
        reduce_expand((0, 2, 2), 1, targets=[(0, 0, 2)])


def test_reduce_pole_order_checked():
    with pytest.raises(PoleOrderExceeded):
        reduce_expand((0, 0, 2, 2), 2, order=0)


def test_psi_closed_examples():
    assert psi_rank1((1, 1), (0, 2), 2) == T
    assert psi_rank1((0, 1), (2, 0), 2) == ZERO
    assert psi_rank1((1, 1), (2, 0), 2) == ONE
    assert psi_rank2((1, 1), (0, 2)) == T
    # pairs (1,3), (1,4) and (3,4) all have mu_i < mu_j and nu_i = nu_j = 1
    assert psi_rank2((1, 0, 1, 1), (0, 0, 1, 2)) == T ** 3
    assert psi_rank2((2, 1, 0), (1, 2, 0)) == ZERO


def test_positions_examples():
    assert psi_positions((1, 0, 1), (3,)) == T
    assert psi_positions((0, 0, 0, 0), (2,)) == ZERO
    assert psi_positions((1, 1), (2,), (1,)) == ONE


def test_H_examples():
    assert H_observable((0, 1), (2,)) == T
    assert H_observable((0, 1, 1), (), ()) == ONE
    assert H_observable((0, 0), (2,), (1,)) == T ** -1


@pytest.mark.parametrize("delta, m, eps", [
    ((0, 2), 1, (1, 1)), ((0, 0, 2), 1, (0, 1, 1)), ((0, 0, 2, 2), 2, (1, 1, 1, 1)),
    ((0, 0, 3), 1, (1, 1, 1)),
])
def test_rank_one_tables(delta, m, eps):
    table = psi_table(delta, m)
    assert table.epsilon == eps and table.consistent
    d = table.common_factor
    for (nu, mu), v in table.entries.items():
        assert v == d * psi_rank1(nu, mu, max(delta))


@pytest.mark.parametrize("delta, p", [((0, 2), 1), ((0, 1, 2), 1), ((0, 0, 1, 2), 1),
                                      ((0, 0, 2, 2), 1), ((0, 0, 2, 2), 2)])
def test_rank_two_tables(delta, p):
    table = psi_table(delta, p=p)
    assert table.consistent
    assert table.common_factor == d_rank_two(delta.count(1), p)
    for (nu, mu), v in table.entries.items():
        assert v == table.common_factor * psi_rank2(nu, mu)


def test_d_rank_two_values():
    assert d_rank_two(0, 1) == ONE / T - ONE
    assert d_rank_two(0, 2) == t_pow(-1) - t_pow(-3)
    assert d_rank_two(1, 1) == t_pow(-2) - t_pow(-1)


def test_exponent_identity_exhaustive():
    assert verify_exponent_identity(6).passed


def test_psi_vs_positions_spurious_factor():
    assert verify_psi_vs_positions(5).passed


def test_spurious_factor_sign():
    """The factor is t^(-m(m-1)/2), not its inverse."""
    mu, nu = (0, 2, 2), (1, 1, 1)
    xs = positions(mu, 2)
    assert psi_rank1(nu, mu, 2) == T ** -1 * psi_positions(nu, xs)
    assert psi_rank1(nu, mu, 2) != T * psi_positions(nu, xs)


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(
    st.permutations([0] * (n - 2) + [1, 2]), st.permutations([0] * (n - 3) + [1, 1, 1])
    if n >= 3 else st.just([1, 1]))))
def test_exponent_identity_property(pair):
    mu, nu = map(tuple, pair)
    from kzduality.combinatorics import indicator
    if len(mu) == len(nu) and indicator(mu, nu):
        lhs, rhs = exponent_identity(mu, nu)
        assert lhs == rhs


def test_probe_examples():
    r = conjecture_probe((1, 0), 1, 1)
    assert r.status == "confirmed" and r.nu == (0, 1) and r.alpha == (ONE - T) / T
    assert conjecture_probe((0, 1), 1, 1).status == "zero"
    r = conjecture_probe((0, 2), 1, 1)
    assert r.status == "confirmed" and r.nu == (1, 1)


def test_specialize_rational_m():
    f = asep_polynomial((0, 1))
    assert specialize(f, Fraction(1, 2)) == f
