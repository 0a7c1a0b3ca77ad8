"""
ASEP polynomials f_mu and their matrix product forms.

f_delta = E_delta on anti-partitions, and f_{s_i mu} = T_i^{-1} f_mu when
mu_i < mu_{i+1}.  Independent constructions from traces of t-boson
operators are provided for sectors with parts in {0, 1, 2} and {0, r}.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

from . import tboson
from .combinatorics import antidominant, multiset_permutations, sector
from .hecke import hecke_T, hecke_T_inv, omega
from .macdonald import nonsymmetric_macdonald
from .ratfunc import ONE, Q, T, ZERO, monomial
from .report import CheckReport
from .zpoly import ZPoly


@lru_cache(maxsize=None)
def asep_polynomial(mu, path="first"):
    """f_mu via the T_i^{-1} recursion from the anti-partition of its sector.

    ``path`` picks the first or last descent at each step; both give the same
    polynomial, which is used as a check on the recursion.
    """
    mu = tuple(mu)
    if mu == antidominant(mu):
        return nonsymmetric_macdonald(mu)
    descents = [i for i in range(1, len(mu)) if mu[i - 1] > mu[i]]
    i = descents[0] if path == "first" else descents[-1]
    prev = mu[:i - 1] + (mu[i], mu[i - 1]) + mu[i + 1:]
    return hecke_T_inv(asep_polynomial(prev, path), i)


def swap_parts(mu, i):
    mu = tuple(mu)
    return mu[:i - 1] + (mu[i], mu[i - 1]) + mu[i + 1:]


def verify_exchange(delta, f=asep_polynomial):
    """Check the three exchange relations for T_i f_nu over a whole sector."""
    delta = antidominant(delta)
    rep = CheckReport(f"exchange {delta}")
    for nu in sector(delta):
        fn = f(nu)
        for i in range(1, len(nu)):
            lhs = hecke_T(fn, i)
            a, b = nu[i - 1], nu[i]
            if a > b:
                rhs = f(swap_parts(nu, i))
            elif a == b:
                rhs = fn.scale(T)
            else:
                rhs = fn.scale(T - 1) + f(swap_parts(nu, i)).scale(T)
            rep.record(lhs == rhs, (nu, i))
    return rep


def verify_cyclic(mu, f=asep_polynomial):
    """f_{(mu_n, mu_1, ..., mu_{n-1})}(q z_n, z_1, ...) = q^{mu_n} f_mu."""
    mu = tuple(mu)
    rot = mu[-1:] + mu[:-1]
    rep = CheckReport(f"cyclic {mu}")
    rep.record(omega(f(rot)) == f(mu).scale(Q ** mu[-1]), mu)
    return rep


def verify_path_independence(mu):
    rep = CheckReport(f"path independence {tuple(mu)}")
    rep.record(asep_polynomial(tuple(mu), "first") == asep_polynomial(tuple(mu), "last"), mu)
    return rep


# -- matrix product constructions -------------------------------------
#
# An operator-valued polynomial in one variable z is {deg: element}, where an
# element of the (r-1)-fold tensor power is {(key_1, ..., key_{r-1}): coeff}.

_ID, _PHI, _K, _PHIDAG = (0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)


def _opoly_kron(x, y):
    """Entrywise tensor product: factors of x come first."""
    out = {}
    for dx, ex in x.items():
        for dy, ey in y.items():
            acc = out.setdefault(dx + dy, {})
            for kx, vx in ex.items():
                for ky, vy in ey.items():
                    tboson._add(acc, kx + ky, vx * vy)
    return {d: e for d, e in out.items() if e}


def _opoly_add(x, y):
    out = {d: dict(e) for d, e in x.items()}
    for d, e in y.items():
        acc = out.setdefault(d, {})
        for k, v in e.items():
            tboson._add(acc, k, v)
    return {d: e for d, e in out.items() if e}


def _shift(x, k):
    return {d + k: e for d, e in x.items()}


def rank_two_site_operators():
    """A_0 = 1 + z phi, A_1 = z k, A_2 = z phi^dag + z^2 (one tensor factor)."""
    return {
        0: {0: {(_ID,): ONE}, 1: {(_PHI,): ONE}},
        1: {1: {(_K,): ONE}},
        2: {1: {(_PHIDAG,): ONE}, 2: {(_ID,): ONE}},
    }


def _L_matrix():
    return [[{0: {(_ID,): ONE}}, {0: {(_PHI,): ONE}}],
            [{1: {(_PHIDAG,): ONE}}, {1: {(_ID,): ONE}}]]


@lru_cache(maxsize=None)
def rank_r_site_operators(r):
    """(A_0, A_r) from the (r-1)-fold product of L(z) applied to (1, z)."""
    M = _L_matrix()
    for _ in range(r - 2):
        L = _L_matrix()
        M = [[_opoly_add(_opoly_kron(M[a][0], L[0][c]), _opoly_kron(M[a][1], L[1][c]))
              for c in range(2)] for a in range(2)]
    a0 = _opoly_add(M[0][0], _shift(M[0][1], 1))
    ar = _opoly_add(M[1][0], _shift(M[1][1], 1))
    return {0: a0, r: ar}


def _mpa_product(mu, ops):
    """Expand prod_i A_{mu_i}(z_i) as {z-exponent: tensor element}."""
    acc = {(): None}
    for part in mu:
        new = {}
        for e, el in acc.items():
            for d, op_el in ops[part].items():
                prod = op_el if el is None else tboson.tensor_mul(el, op_el)
                tgt = new.setdefault(e + (d,), {})
                for k, v in prod.items():
                    tboson._add(tgt, k, v)
        acc = {e: el for e, el in new.items() if el}
    return acc


def mpa_rank_two(mu):
    """(1 - q t^{m_1}) Tr(A_{mu_1}(z_1) ... A_{mu_n}(z_n) k^u)."""
    mu = tuple(mu)
    if not set(mu) <= {0, 1, 2}:
        raise ValueError("parts must lie in {0, 1, 2}")
    m1 = mu.count(1)
    pref = ONE - monomial(1, m1)
    terms = {}
    for e, el in _mpa_product(mu, rank_two_site_operators()).items():
        c = tboson.tensor_trace(el, (1,))
        if c:
            terms[e] = c * pref
    return ZPoly(len(mu), terms)


def mpa_rank_r(mu):
    """prod_{i<r}(1 - q^i) Tr(A_{mu_1} ... A_{mu_n} k^{u(r-1)} x ... x k^u) for parts in {0, r}."""
    mu = tuple(mu)
    r = max(mu)
    if not set(mu) <= {0, r} or r < 2:
        raise ValueError("parts must lie in {0, r} with r >= 2")
    twists = tuple(range(r - 1, 0, -1))
    pref = ONE
    for i in range(1, r):
        pref = pref * (ONE - Q ** i)
    terms = {}
    for e, el in _mpa_product(mu, rank_r_site_operators(r)).items():
        c = tboson.tensor_trace(el, twists)
        if c:
            terms[e] = c * pref
    return ZPoly(len(mu), terms)


def coefficient_C(alpha, beta, j):
    """Tr(L(alpha_1, beta_1) ... L(alpha_n, beta_n) k^{ju}) with
    L(a, a) = 1, L(0, 1) = phi, L(1, 0) = phi^dag."""
    word = []
    for a, b in zip(alpha, beta):
        if (a, b) == (0, 1):
            word.append(tboson.PHI)
        elif (a, b) == (1, 0):
            word.append(tboson.PHIDAG)
    return tboson.trace(tboson.normal_form(word), j)


def f_delta_sum_formula(delta):
    """f_delta for delta = (0^{n-m}, r^m) as a sum over (r-1)-tuples in the rank-one sector."""
    delta = tuple(delta)
    r = max(delta)
    star = tuple(v // r for v in delta)
    n = len(delta)
    pref = ONE
    for i in range(1, r):
        pref = pref * (ONE - Q ** i)
    sec = list(multiset_permutations(star))
    out = {}
    for chain in product(sec, repeat=r - 1):
        levels = list(chain) + [star]
        c = pref
        exp = list(star)
        for j in range(1, r):
            c = c * coefficient_C(levels[j], levels[j - 1], j)
            if not c:
                break
            exp = [a + b for a, b in zip(exp, levels[j - 1])]
        if c:
            e = tuple(exp)
            out[e] = out.get(e, ZERO) + c
    return ZPoly(n, out)


def _elementary(vars_, k, n):
    """e_k in the given 1-based variables, as a ZPoly in n variables."""
    from itertools import combinations
    out = {}
    for combo in combinations(vars_, k):
        e = [0] * n
        for v in combo:
            e[v - 1] = 1
        out[tuple(e)] = ONE
    return ZPoly(n, out)


def f_delta_rank_two_closed(n, m1, m2):
    """Closed form of f_delta for delta = (0^{n-m1-m2}, 1^m1, 2^m2)."""
    lead = [0] * n
    for j in range(1, m1 + m2 + 1):
        lead[n - j] += 1
    lead_poly = ZPoly.monomial(lead)
    low = list(range(1, n - m1 - m2 + 1))
    high = list(range(n - m2 + 1, n + 1))
    total = ZPoly.zero(n)
    for i in range(0, m2 + 1):
        c = monomial(0, i * m1)
        for j in range(1, i + 1):
            c = c * (ONE - monomial(0, j)) / (ONE - monomial(1, m1 + j))
        total = total + (_elementary(low, i, n) * _elementary(high, m2 - i, n)).scale(c)
    return lead_poly * total


boson_normal_form = tboson.normal_form
boson_trace = tboson.trace
mpa_f_rank2 = mpa_rank_two
mpa_f_rank_r = mpa_rank_r
coefficient_Cj = coefficient_C
f_delta_sum_rank_r = f_delta_sum_formula
f_delta_rank2_closed = f_delta_rank_two_closed
