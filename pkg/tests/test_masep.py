import pytest

from kzduality import masep
from kzduality.combinatorics import positions, sector
from kzduality.ratfunc import ONE, T, ZERO
from kzduality.reduction import H_observable, psi_positions, psi_rank2, psi_table
from kzduality.suite import perturbed_f

delta_fn = lambda nu, mu: ONE if nu == mu else ZERO


def test_L_M_examples():
    psi = lambda nu, mu: ONE if mu == (0, 1) and nu == (0, 1) else ZERO
    assert masep.L_apply(psi, (1, 0), (0, 1), 1) == T
    assert masep.L_apply(psi, (1, 1), (0, 1), 1) == ZERO


@pytest.mark.parametrize("delta", [(0, 1), (0, 1, 2), (0, 0, 2), (1, 1, 2)])
def test_delta_observable(delta):
    states = sector(delta)
    rep = masep.verify_local_duality(delta_fn, states, states, matrix_check=True)
    assert rep.passed, rep.failures


def test_generator_sums():
    for delta in [(0, 1, 2), (0, 0, 1, 2)]:
        for i in range(1, len(delta)):
            assert masep.verify_generator_sums(sector(delta), i).passed
    L = masep.generator_matrix("L", sector((0, 1, 2)), 1)
    assert set(L[k] for k in L if k[0] != k[1]) <= {ONE, T}


def test_constant_psi_fails():
    states = sector((0, 1, 2))
    rep = masep.verify_local_duality(lambda nu, mu: ONE, states, states)
    assert not rep.passed and rep.failures


def test_table_duality_examples():
    assert masep.verify_table_duality(psi_table((0, 0, 2), 1)).passed
    t2 = psi_table((0, 0, 1, 2), p=1)
    assert masep.verify_table_duality(t2).passed
    assert masep.verify_local_duality(psi_rank2, sector((0, 1, 1, 1)), sector((0, 0, 1, 2))).passed


@pytest.mark.parametrize("delta, m, p", [((0, 0, 2), 1, None), ((0, 0, 2, 2), 2, None),
                                         ((0, 1, 2), None, 1)])
def test_intertwining(delta, m, p):
    assert masep.verify_intertwining(psi_table(delta, m, p)).passed


def test_vector_identity():
    assert masep.verify_vector_identity((0, 1))
    assert masep.verify_vector_identity((0, 1, 2))
    assert not masep.verify_vector_identity((0, 1, 2), f=perturbed_f)
    assert masep.rmatrix_check(3).passed


def test_positional_rank_one_window6():
    confs = masep.configurations_bounded(6, 1, 3)
    rep = masep.verify_local_duality(lambda nu, mu: psi_positions(nu, positions(mu, 1)), confs, confs)
    assert rep.passed


def test_positional_rank_two_window4():
    confs = masep.configurations_bounded(4, 2, 2)
    psi = lambda nu, mu: psi_positions(nu, positions(mu, 1), positions(mu, 2))
    assert masep.verify_local_duality(psi, confs, confs).passed


def test_global_examples():
    H = lambda nu, mu: H_observable(nu, *masep.species_positions(mu, 2))
    assert masep.verify_global_duality(H, (0, 0, 0), (0, 2, 1))
    H1 = lambda nu, mu: H_observable(nu, positions(mu, 1))
    assert masep.verify_global_duality(H1, (1, 0), (0, 1))
    assert masep.verify_global_duality(H, (1, 1, 0), (1, 2, 0))


def test_global_padding_invariance():
    H = lambda nu, mu: H_observable(nu, *masep.species_positions(mu, 2))
    for margin in (1, 2, 4):
        assert masep.verify_global_duality(H, (1, 0, 1), (2, 0, 1), margin=margin)


def test_sweep_routes_agree():
    """The vectorised sweep and the exact route agree on a small window."""
    for species in (1, 2, 3):
        H = lambda nu, mu, s=species: H_observable(nu, *masep.species_positions(mu, s))
        exact = all(masep.verify_global_duality(H, nu, mu)
                    for nu in masep.configurations_bounded(4, 1, 3)
                    for mu in masep.configurations_bounded(4, species, 2))
        assert exact and masep.global_sweep(4, species, 2).passed


def test_sweep_detects_broken_observable():
    H = lambda nu, mu: H_observable(nu, positions(mu, 1), positions(mu, 2)) * T
    broken = lambda nu, mu: H_observable(nu, positions(mu, 1)) if 2 in mu else H(nu, mu)
    assert not all(masep.verify_global_duality(broken, nu, mu)
                   for nu in masep.configurations_bounded(3, 1, 2)
                   for mu in masep.configurations_bounded(3, 2, 1))
