"""
Multi-species ASEP generators and duality checks.

Configurations are tuples of species labels on sites 1..n (0 = empty).
The bond generators act on functions psi(nu, mu):

    L_i[psi(., mu)](nu) = t^{theta_i(nu)} (psi(s_i nu, mu) - psi(nu, mu))
    M_i[psi(nu, .)](mu) = t^{theta_i(s_i mu)} psi(nu, s_i mu) - t^{theta_i(mu)} psi(nu, mu)

with theta_i = 1 if the left site carries the larger label and 0 if the
smaller; both vanish when the two labels agree.
"""
from __future__ import annotations

from itertools import combinations, product

import numpy as np

from .asep_poly import asep_polynomial
from .combinatorics import crossing_chi, positions, sector
from .hecke import local_L
from .ratfunc import ONE, T, ZERO, t_pow
from .report import CheckReport
from .zpoly import ZPoly


def swap(conf, i):
    return conf[:i - 1] + (conf[i], conf[i - 1]) + conf[i + 1:]


def theta(conf, i):
    return 1 if conf[i - 1] > conf[i] else 0


def L_apply(psi, nu, mu, i):
    if nu[i - 1] == nu[i]:
        return ZERO
    return t_pow(theta(nu, i)) * (psi(swap(nu, i), mu) - psi(nu, mu))


def M_apply(psi, nu, mu, i):
    if mu[i - 1] == mu[i]:
        return ZERO
    smu = swap(mu, i)
    return t_pow(theta(smu, i)) * psi(nu, smu) - t_pow(theta(mu, i)) * psi(nu, mu)


# -- matrix forms -----------------------------------------------------

def generator_matrix(side, states, i):
    """Sparse matrix {(row, col): entry} of l_i (side='L') or m_i (side='M').

    l_i: off-diagonal t if row_i > row_{i+1}, else 1; rows sum to zero.
    m_i: off-diagonal 1 if row_i > row_{i+1}, else t; columns sum to zero.
    """
    mat = {}
    for a in states:
        if a[i - 1] == a[i]:
            continue
        b = swap(a, i)
        big = a[i - 1] > a[i]
        if side == "L":
            mat[a, b] = T if big else ONE
            mat[a, a] = -(T if big else ONE)
        elif side == "M":
            mat[a, b] = ONE if big else T
            mat[a, a] = -(T if big else ONE)
        else:
            raise ValueError(side)
    return mat


def matrix_apply_left(mat, psi, nu, mu):
    """sum_{nu'} l(nu, nu') psi(nu', mu)."""
    s = ZERO
    for (a, b), v in mat.items():
        if a == nu:
            s = s + v * psi(b, mu)
    return s


def matrix_apply_right(mat, psi, nu, mu):
    """sum_{mu'} m(mu, mu') psi(nu, mu')."""
    s = ZERO
    for (a, b), v in mat.items():
        if a == mu:
            s = s + v * psi(nu, b)
    return s


def verify_generator_sums(states, i):
    rep = CheckReport(f"generator sums bond {i}")
    L = generator_matrix("L", states, i)
    M = generator_matrix("M", states, i)
    for a in states:
        rep.record(sum((v for (r, _), v in L.items() if r == a), ZERO) == ZERO, ("row", a))
        rep.record(sum((v for (_, c), v in M.items() if c == a), ZERO) == ZERO, ("col", a))
    return rep


def verify_local_duality(psi, nus, mus, bonds=None, matrix_check=False):
    """L_i[psi(., mu)](nu) == M_i[psi(nu, .)](mu) for all nu, mu and bonds."""
    nus = list(nus)
    mus = list(mus)
    n = len(nus[0])
    bonds = list(bonds or range(1, n))
    rep = CheckReport("local duality")
    mats = {}
    if matrix_check:
        for i in bonds:
            mats[i] = (generator_matrix("L", nus, i), generator_matrix("M", mus, i))
    for nu in nus:
        for mu in mus:
            for i in bonds:
                lhs = L_apply(psi, nu, mu, i)
                rhs = M_apply(psi, nu, mu, i)
                rep.record(lhs == rhs, (nu, mu, i))
                if matrix_check:
                    Lm, Mm = mats[i]
                    rep.record(matrix_apply_left(Lm, psi, nu, mu) == lhs, ("L-matrix", nu, mu, i))
                    rep.record(matrix_apply_right(Mm, psi, nu, mu) == rhs, ("M-matrix", nu, mu, i))
    return rep


def table_function(entries):
    return lambda nu, mu: entries.get((nu, mu), ZERO)


def verify_table_duality(table):
    """Local duality of a computed psi table over its two sectors."""
    psi = table_function(table.entries)
    rep = verify_local_duality(psi, sector(table.epsilon), sector(table.delta))
    rep.name = f"local duality table {table.delta} -> {table.epsilon}"
    return rep


def verify_intertwining(table):
    """Relations obeyed by psi under s_i when mu_i > mu_{i+1}.

    psi(k, s_i mu) = psi(s_i k, mu) + (t - 1) psi(k, mu)   (k_i < k_{i+1})
                   = t psi(k, mu)                          (k_i = k_{i+1})
                   = t psi(s_i k, mu)                      (k_i > k_{i+1})
    """
    psi = table_function(table.entries)
    rep = CheckReport(f"intertwining {table.delta}")
    for mu in sector(table.delta):
        for i in range(1, len(mu)):
            if not mu[i - 1] > mu[i]:
                continue
            smu = swap(mu, i)
            for k in sector(table.epsilon):
                if k[i - 1] < k[i]:
                    rhs = psi(swap(k, i), mu) + (T - 1) * psi(k, mu)
                elif k[i - 1] == k[i]:
                    rhs = T * psi(k, mu)
                else:
                    rhs = T * psi(swap(k, i), mu)
                rep.record(psi(k, smu) == rhs, (k, mu, i))
    return rep


# -- configurations on windows ----------------------------------------

def configurations(width, counts):
    """All configurations on ``width`` sites with counts[j] particles of species j+1."""
    out = []
    sites = range(width)

    def rec(species, free, conf):
        if species > len(counts):
            out.append(tuple(conf))
            return
        for chosen in combinations(free, counts[species - 1]):
            new = list(conf)
            for s in chosen:
                new[s] = species
            rest = [f for f in free if f not in chosen]
            rec(species + 1, rest, new)

    rec(1, list(sites), [0] * width)
    return out


def configurations_bounded(width, species, max_each):
    out = []
    for counts in product(range(max_each + 1), repeat=species):
        if sum(counts) <= width:
            out.extend(configurations(width, counts))
    return out


def species_positions(mu, r=None):
    r = r or max(mu, default=0)
    return [positions(mu, j) for j in range(1, r + 1)]


def verify_global_duality(H, nu, mu, margin=1, max_margin=8):
    """sum_i L_i[H(., mu)](nu) == sum_i M_i[H(nu, .)](mu) on a padded window.

    The window is padded by ``margin`` empty sites on both sides and
    enlarged while the outermost bonds still contribute.
    """
    while True:
        pad = (0,) * margin
        a = pad + tuple(nu) + pad
        b = pad + tuple(mu) + pad
        n = len(a)
        lhs = rhs = ZERO
        edge = False
        for i in range(1, n):
            li = L_apply(H, a, b, i)
            mi = M_apply(H, a, b, i)
            if (li or mi) and i in (1, n - 1):
                edge = True
            lhs = lhs + li
            rhs = rhs + mi
        if not edge:
            return lhs == rhs
        if margin >= max_margin:
            raise RuntimeError("window margin cap reached")
        margin += 1


def global_sweep(width, species, max_each=3, max_nu=3):
    """Exhaustive global-duality check of H for all configurations on a window.

    nu ranges over single-species configurations with <= max_nu particles,
    mu over configurations with <= max_each particles of each species
    1..species, each padded by one empty site on both sides so that every
    contributing bond is included.  For each nu both sides are Laurent
    polynomials in t for all mu at once; their integer coefficients are
    accumulated with bincount and compared exactly.
    """
    n = width + 2
    nus = [(0,) + c + (0,) for c in configurations_bounded(width, 1, max_nu)]
    mus = [(0,) + c + (0,) for c in configurations_bounded(width, species, max_each)]
    M = np.array(mus, dtype=np.int64)
    O = (M > 0).astype(np.int64)
    chi = np.array([crossing_chi(*species_positions(m, species)) for m in mus], dtype=np.int64)
    nM = len(mus)
    off = int(chi.max(initial=0)) + 2
    span = off + int(O.sum(axis=1).max(initial=0)) * max_nu + 4
    rows = np.arange(nM, dtype=np.int64) * span
    bonds = []
    for i in range(n - 1):
        a, b = M[:, i], M[:, i + 1]
        moving = a != b
        dchi = np.where((a > 0) & (b > 0) & (a < b), 1, 0) - np.where((a > b) & (b > 0), 1, 0)
        bonds.append((moving, (a > b).astype(np.int64), (b > a).astype(np.int64),
                      O[:, i] - O[:, i + 1], dchi))
    rep = CheckReport(f"global duality width={width} species={species}")
    for nu in nus:
        v = np.array(nu, dtype=np.int64)
        P = np.cumsum(v)
        e = O @ P - chi
        keys, signs = [], []
        for i, (moving, th, th_s, docc, dchi) in enumerate(bonds):
            # right-hand side: M_i acting on mu
            r = rows[moving]
            e_s = (e + docc * v[i + 1] - dchi)[moving]
            keys += [r + e_s + th_s[moving] + off, r + e[moving] + th[moving] + off]
            signs += [np.full(len(r), -1), np.full(len(r), 1)]
            # left-hand side: L_i acting on nu; only the prefix at site i changes
            if v[i] != v[i + 1]:
                occ = O[:, i] == 1
                r = rows[occ]
                tn = 1 if v[i] > v[i + 1] else 0
                keys += [r + e[occ] + (v[i + 1] - v[i]) + tn + off, r + e[occ] + tn + off]
                signs += [np.full(len(r), 1), np.full(len(r), -1)]
        if keys:
            tot = np.bincount(np.concatenate(keys), weights=np.concatenate(signs),
                              minlength=nM * span)
            bad = np.nonzero(tot)[0]
        else:
            bad = []
        rep.checked += nM
        if len(bad):
            rep.passed = False
            if len(rep.failures) < 10:
                rep.failures.append((nu, mus[bad[0] // span]))
    return rep


# -- vector forms -----------------------------------------------------

def local_tkz_vector_check(delta):
    """(T_i - t) f_kappa == sum_mu m_i(kappa, mu) f_mu over a sector."""
    states = sector(tuple(sorted(delta)))
    rep = CheckReport(f"vector tKZ {tuple(sorted(delta))}")
    for i in range(1, len(delta)):
        M = generator_matrix("M", states, i)
        for kappa in states:
            lhs = local_L(asep_polynomial(kappa), i)
            rhs = ZPoly.zero(len(delta))
            for (a, b), v in M.items():
                if a == kappa:
                    rhs = rhs + asep_polynomial(b).scale(v)
            rep.record(lhs == rhs, (kappa, i))
    return rep


def rmatrix_check(n):
    """s_i |I> = R_i(z_i / z_{i+1}) |I> for |I> = sum_mu z^mu |mu>, mu in {0,1}^n.

    Entries are cleared of the common denominator (z_{i+1} - t z_i):
    b+ -> t (z_{i+1} - z_i), b- -> z_{i+1} - z_i, c+ -> (1 - t) z_{i+1},
    c- -> (1 - t) z_i, and the unit entries -> z_{i+1} - t z_i.
    """
    rep = CheckReport(f"R-matrix n={n}")
    states = list(product((0, 1), repeat=n))
    I = {mu: ZPoly.monomial(mu) for mu in states}
    for i in range(1, n):
        zi, zj = ZPoly.variable(i, n), ZPoly.variable(i + 1, n)
        den = zj - zi.scale(T)
        bp, bm = (zj - zi).scale(T), zj - zi
        cp, cm = zj.scale(ONE - T), zi.scale(ONE - T)
        for mu in states:
            a, b = mu[i - 1], mu[i]
            lhs = I[mu].swap(i) * den
            if a == b:
                rhs = I[mu] * den
            elif (a, b) == (0, 1):
                rhs = cm * I[mu] + bp * I[swap(mu, i)]
            else:
                rhs = bm * I[swap(mu, i)] + cp * I[mu]
            rep.record(lhs == rhs, (mu, i))
    return rep


def verify_vector_identity(delta, i=None, f=None):
    """L_i sum_mu f_mu |mu> == M_i sum_mu f_mu |mu> componentwise, plus the
    R-matrix form when the sector is rank one."""
    delta = tuple(sorted(delta))
    f = f or asep_polynomial
    states = sector(delta)
    bonds = [i] if i else range(1, len(delta))
    for b in bonds:
        M = generator_matrix("M", states, b)
        for kappa in states:
            rhs = ZPoly.zero(len(delta))
            for (a, c), v in M.items():
                if a == kappa:
                    rhs = rhs + f(c).scale(v)
            if local_L(f(kappa), b) != rhs:
                return False
    if max(delta, default=0) <= 1 and f is asep_polynomial:
        return rmatrix_check(len(delta)).passed
    return True
