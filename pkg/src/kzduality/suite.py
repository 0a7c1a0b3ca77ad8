"""
The acceptance checks, grouped by criterion.  Each ``criterion_k`` returns a
CheckReport; ``run_suite`` runs a selection, optionally in worker processes,
and returns reports in criterion order.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import hecke, masep
from .asep_poly import (asep_polynomial, f_delta_rank_two_closed, f_delta_sum_formula,
                        mpa_rank_r, mpa_rank_two, verify_cyclic, verify_exchange,
                        verify_path_independence)
from .combinatorics import (antidominant, compositions, compositions_up_to, multiset_permutations,
                            partitions, positions, sector)
from .macdonald import exchange_step_E, nonsymmetric_macdonald, verify_eigen
from .ratfunc import ONE, T, ZERO
from .reduction import (conjecture_probe, d_rank_two, psi_positions, psi_rank2, psi_table,
                        reduce_expand, verify_exponent_identity, verify_psi_vs_positions)
from .report import CheckReport
from .zpoly import ZPoly, coeff_p_poly


def sectors(n, max_part):
    """Anti-partitions of length n with parts <= max_part."""
    out = set()
    for w in range(n * max_part + 1):
        for lam in partitions(w, n, max_part):
            out.add(antidominant(lam))
    return sorted(out)


def criterion_1():
    rep = CheckReport("hecke relations n<=4 deg<=4")
    for n in range(1, 5):
        rep.merge(hecke.verify_hecke_relations(n, degree=4))
    return rep


def criterion_2():
    rep = CheckReport("macdonald eigen/monic/triangular n<=3 |mu|<=4")
    count = 0
    for n in range(1, 4):
        for mu in compositions_up_to(n, 4):
            E = nonsymmetric_macdonald(mu)
            rep.merge(verify_eigen(E, mu))
            count += 1
            for i in range(1, n):
                if mu[i - 1] < mu[i]:
                    smu = mu[:i - 1] + (mu[i], mu[i - 1]) + mu[i + 1:]
                    rep.record(exchange_step_E(E, mu, i) == nonsymmetric_macdonald(smu),
                               ("exchange_step_E", mu, i))
            if sum(mu) <= 3:
                rep.record(nonsymmetric_macdonald(mu, method="bareiss") == E, ("bareiss", mu))
    rep.info["polynomials"] = count
    rep.record(count >= 50, ("count", count))
    return rep


def criterion_3():
    rep = CheckReport("asep exchange/cyclic n<=3 parts<=2 and (0,0,2,2)")
    deltas = [d for n in range(1, 4) for d in sectors(n, 2)] + [(0, 0, 2, 2)]
    for delta in deltas:
        rep.merge(verify_exchange(delta))
        for mu in sector(delta):
            rep.merge(verify_cyclic(mu))
            rep.merge(verify_path_independence(mu))
    for n in range(1, 5):
        for delta in sectors(n, 1):
            for mu in sector(delta):
                rep.record(asep_polynomial(mu) == ZPoly.monomial(mu), ("rank one", mu))
    return rep


def criterion_4():
    rep = CheckReport("matrix product vs recursion")
    for n in range(1, 5):
        for delta in sectors(n, 2):
            if 2 not in delta:
                continue
            for mu in sector(delta):
                rep.record(mpa_rank_two(mu) == asep_polynomial(mu), ("rank two", mu))
    for n in range(1, 4):
        for m in range(1, n + 1):
            delta = (0,) * (n - m) + (3,) * m
            rep.record(f_delta_sum_formula(delta) == asep_polynomial(delta), ("sum r=3", delta))
            for mu in sector(delta):
                rep.record(mpa_rank_r(mu) == asep_polynomial(mu), ("rank r=3", mu))
    for n in range(1, 6):
        for m2 in range(1, n + 1):
            for m1 in range(0, n - m2 + 1):
                delta = (0,) * (n - m1 - m2) + (1,) * m1 + (2,) * m2
                rep.record(f_delta_rank_two_closed(n, m1, m2) == asep_polynomial(delta),
                           ("closed", delta))
    return rep


def _table_report(rep, table, eps_expected):
    rep.record(table.epsilon == eps_expected, ("sector", table.delta, table.epsilon))
    rep.record(table.consistent, ("single d(t)", table.delta, str(table.common_factor)))
    for (nu, mu), v in table.entries.items():
        if v:
            rep.record(all(a <= 1 or b == 2 for a, b in zip(nu, nu)), ("entry", nu, mu))
    rep.info[str(table.delta)] = str(table.common_factor)


def criterion_5():
    rep = CheckReport("rank-one reduction")
    from .asep_poly import asep_polynomial as f
    g = coeff_p_poly(f((0, 2)), 1, 1)
    rep.record(g == ZPoly.monomial((1, 1), ONE - T), ("pinned Coeff", str(g)))
    rep.record(reduce_expand((0, 2), 1) == {(1, 1): ONE - T}, "pinned expansion")
    for n, r, m in [(2, 2, 1), (3, 2, 1), (4, 2, 2), (3, 3, 1)]:
        delta = (0,) * (n - m) + (r,) * m
        table = psi_table(delta, m)
        _table_report(rep, table, (0,) * (n - r * m) + (1,) * (r * m))
    return rep


def criterion_6():
    rep = CheckReport("rank-two reduction")
    for n, m1, m2, p in [(2, 0, 1, 1), (3, 1, 1, 1), (4, 1, 1, 1), (4, 0, 2, 1), (4, 0, 2, 2)]:
        delta = (0,) * (n - m1 - m2) + (1,) * m1 + (2,) * m2
        table = psi_table(delta, p=p)
        _table_report(rep, table, (0,) * (n - m1 - m2 - p) + (1,) * (m1 + 2 * p) + (2,) * (m2 - p))
        rep.record(table.common_factor == d_rank_two(m1, p), ("d(t) closed form", delta, p))
        rep.merge(masep.verify_intertwining(table))
    return rep


def criterion_7(max_window=8, max_window_rank2=6, global_width=10):
    rep = CheckReport("duality")
    # (a) delta observable and the vector form on every small sector
    delta_fn = lambda nu, mu: ONE if nu == mu else ZERO
    for n in range(2, 4):
        for delta in sectors(n, 2):
            states = sector(delta)
            rep.merge(masep.verify_local_duality(delta_fn, states, states, matrix_check=True))
            rep.merge(masep.verify_generator_sums(states, 1))
            rep.merge(masep.local_tkz_vector_check(delta))
    # (b) rank-one tables and positional form
    for delta, m in [((0, 2), 1), ((0, 0, 2), 1), ((0, 2, 2), 1), ((0, 0, 2, 2), 2), ((0, 0, 3), 1)]:
        rep.merge(masep.verify_table_duality(psi_table(delta, m)))
    for w in range(2, max_window + 1):
        confs = masep.configurations_bounded(w, 1, 3)
        rep.merge(masep.verify_local_duality(
            lambda nu, mu: psi_positions(nu, positions(mu, 1)), confs, confs))
    # (c) rank-two tables, closed form and positional form
    for delta, p in [((0, 2), 1), ((0, 1, 2), 1), ((0, 0, 1, 2), 1), ((0, 0, 2, 2), 1), ((0, 0, 2, 2), 2)]:
        table = psi_table(delta, p=p)
        rep.merge(masep.verify_table_duality(table))
        rep.merge(masep.verify_local_duality(psi_rank2, sector(table.epsilon), sector(delta)))
    for w in range(2, max_window_rank2 + 1):
        confs = masep.configurations_bounded(w, 2, 3)
        rep.merge(masep.verify_local_duality(
            lambda nu, mu: psi_positions(nu, positions(mu, 1), positions(mu, 2)), confs, confs))
    # (d) global duality: exact RatFunc route on small windows, vectorised sweep on large ones
    from .reduction import H_observable
    for species in (1, 2, 3):
        H = lambda nu, mu, s=species: H_observable(nu, *masep.species_positions(mu, s))
        for w in range(1, 5):
            for nu in masep.configurations_bounded(w, 1, 3):
                for mu in masep.configurations_bounded(w, species, 2):
                    rep.record(masep.verify_global_duality(H, nu, mu), ("global", nu, mu))
        for w in range(1, global_width + 1):
            rep.merge(masep.global_sweep(w, species, 3))
    # (e) R-matrix form in rank one
    for n in (2, 3):
        rep.merge(masep.rmatrix_check(n))
    return rep


def criterion_8():
    rep = verify_exponent_identity(6)
    rep.merge(verify_psi_vs_positions(6))
    rep.name = "exponent identity n<=6"
    return rep


def criterion_9():
    rep = CheckReport("conjecture probes")
    statuses = {}
    confirmed = []
    for n in (1, 2, 3):
        for mu in compositions_up_to(n, 4):
            for m in (1, 2):
                for p in (1, 2):
                    r = conjecture_probe(mu, m, p)
                    statuses[r.status] = statuses.get(r.status, 0) + 1
                    rep.record(r.status in ("confirmed", "zero", "pole-exceeded"), (mu, m, p, r.status))
                    if r.status == "confirmed":
                        confirmed.append((mu, m, p, r.nu))
    pinned = conjecture_probe((1, 0), 1, 1)
    rep.record(pinned.status == "confirmed" and pinned.nu == (0, 1), "pinned (1,0)")
    rep.record(pinned.alpha == (ONE - T) / T, "pinned ratio")
    rep.record(len(confirmed) >= 10, ("confirmed", len(confirmed)))
    rep.info.update(statuses)
    rep.info["confirmed"] = len(confirmed)
    return rep


def perturbed_f(mu):
    f = asep_polynomial(mu)
    if mu == (0, 1, 2):
        return f + ZPoly.monomial((1, 1, 1), T)
    return f


def criterion_10():
    """Each negative control must fail with at least one witness."""
    rep = CheckReport("negative controls")
    bad = hecke.verify_hecke_relations(3, degree=2, T_impl=hecke.corrupted_T)
    rep.record(not bad.passed and bad.failures, "corrupted T passed")
    bad = verify_exchange((0, 1, 2), f=perturbed_f)
    rep.record(not bad.passed and bad.failures, "perturbed f passed")
    states = sector((0, 1, 2))
    bad = masep.verify_local_duality(lambda nu, mu: ONE, states, states)
    rep.record(not bad.passed and bad.failures, "constant psi passed")
    return rep


@dataclass
class Criterion:
    number: int
    name: str
    fn: object
    budget: float


CRITERIA = [
    Criterion(1, "hecke relations", criterion_1, 30),
    Criterion(2, "macdonald suite", criterion_2, 120),
    Criterion(3, "asep polynomial suite", criterion_3, 120),
    Criterion(4, "matrix product cross-validation", criterion_4, 300),
    Criterion(5, "rank-one reduction", criterion_5, 300),
    Criterion(6, "rank-two reduction", criterion_6, 600),
    Criterion(7, "duality verification", criterion_7, 600),
    Criterion(8, "exponent identity", criterion_8, 60),
    Criterion(9, "conjecture probes", criterion_9, 300),
    Criterion(10, "negative controls", criterion_10, 10),
]


def run_one(number):
    c = CRITERIA[number - 1]
    start = time.perf_counter()
    rep = c.fn()
    elapsed = time.perf_counter() - start
    rep.info["seconds"] = round(elapsed, 3)
    rep.info["budget"] = c.budget
    if elapsed > c.budget:
        rep.passed = False
        rep.failures.append(("budget exceeded", round(elapsed, 1), c.budget))
    return number, rep


def run_suite(numbers=None, threads=1):
    numbers = sorted(numbers or [c.number for c in CRITERIA])
    if threads > 1:
        with ProcessPoolExecutor(threads) as ex:
            out = dict(ex.map(run_one, numbers))
    else:
        out = dict(run_one(k) for k in numbers)
    return [(k, out[k]) for k in numbers]
