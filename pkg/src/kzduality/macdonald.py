"""
Non-symmetric Macdonald polynomials E_mu as joint eigenfunctions of Y_i.

E_mu is the unique polynomial with Y_i E_mu = y_i(mu) E_mu and
E_mu = z^mu + (terms z^nu with nu strictly below mu).  Two exact solvers
are provided:

* ``triangular``: Y_i is triangular in the monomial basis, so the
  coefficients follow by back-substitution along a linear extension of
  the order, choosing for each nu an index i with y_i(nu) != y_i(mu).
* ``bareiss``: fraction-free elimination on the stacked system
  (Y_i - y_i(mu)) c = 0 for all i.  Slower; used for cross-checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import (antidominant, dominant, lower_set, monomial_cone, order_key,
                            sector, spectral_exponents, spectral_vector)
from .hecke import InternalError, cherednik_Y, cherednik_Y_monomial, hecke_T
from .linalg import nullspace_vector
from .ratfunc import ONE, T, ZERO, monomial
from .report import CheckReport
from .zpoly import ZPoly


@dataclass(frozen=True)
class MonomialCone:
    lam: tuple
    basis: tuple

    @classmethod
    def of(cls, lam):
        lam = dominant(lam)
        return cls(lam, monomial_cone(lam))


def _y_matrix_entry(kappa, nu, i):
    return cherednik_Y_monomial(kappa, i).coefficient(nu)


def _solve_triangular(mu):
    support = lower_set(mu)
    ys = spectral_exponents(mu)
    yv = spectral_vector(mu)
    coeffs = {mu: ONE}
    for nu in reversed(support[:-1]):
        ynu = spectral_exponents(nu)
        i = next((k for k in range(len(mu)) if ynu[k] != ys[k]), None)
        if i is None:
            raise InternalError(f"degenerate spectrum for {nu} and {mu}")
        s = ZERO
        for kappa, ck in coeffs.items():
            a = _y_matrix_entry(kappa, nu, i + 1)
            if a:
                s = s + a * ck
        if s:
            c = s / (yv[i] - monomial(*ynu[i]))
            coeffs[nu] = c
    return ZPoly(len(mu), coeffs)


def _solve_bareiss(mu):
    support = lower_set(mu)
    index = {nu: k for k, nu in enumerate(support)}
    n = len(mu)
    yv = spectral_vector(mu)
    rows = []
    for i in range(1, n + 1):
        block = [[ZERO] * len(support) for _ in support]
        for kappa in support:
            img = cherednik_Y_monomial(kappa, i)
            for nu, c in img.terms.items():
                if nu not in index:
                    raise InternalError(f"Y_{i} z^{kappa} leaves the support")
                block[index[nu]][index[kappa]] = c
        for k in range(len(support)):
            block[k][k] = block[k][k] - yv[i - 1]
        rows.extend(r for r in block if any(r))
    if not rows:
        return ZPoly.monomial(mu)
    x = nullspace_vector(rows, index[mu])
    return ZPoly(n, {nu: c for nu, c in zip(support, x) if c})


@lru_cache(maxsize=None)
def nonsymmetric_macdonald(mu, method="triangular"):
    """E_mu with coefficients in Q(q, t)."""
    mu = tuple(mu)
    if method == "triangular":
        return _solve_triangular(mu)
    if method == "bareiss":
        return _solve_bareiss(mu)
    raise ValueError(f"unknown method {method!r}")


def verify_eigen(E, mu):
    """Check Y_i E = y_i(mu) E for every i and monicity."""
    rep = CheckReport(f"eigen {tuple(mu)}")
    for i, y in enumerate(spectral_vector(mu), start=1):
        rep.record(cherednik_Y(E, i) == E.scale(y), ("Y", i))
    rep.record(E.coefficient(mu) == ONE, "leading coefficient")
    rep.record(all(nu in set(lower_set(mu)) for nu in E.terms), "support")
    return rep


def exchange_step_E(E, mu, i, literal=False):
    """E_{s_i mu} from E_mu when mu_i < mu_{i+1}.

    E_{s_i mu} = t^{-1} (T_i + (1 - t) / (1 - t y_{i+1}(mu) / y_i(mu))) E_mu.

    With the normalisation of y used here the ratio carries an extra t;
    ``literal=True`` drops it (and gives a wrong answer, kept for tests).
    """
    mu = tuple(mu)
    if not mu[i - 1] < mu[i]:
        raise ValueError(f"need mu_{i} < mu_{i + 1}")
    y = spectral_vector(mu)
    ratio = y[i] / y[i - 1]
    if not literal:
        ratio = ratio * T
    a = (ONE - T) / (ONE - ratio)
    return (hecke_T(E, i) + E.scale(a)).scale(ONE / T)


def triangular_expand(poly, basis, allowed):
    """Expand ``poly`` in a triangular basis.

    ``basis(nu)`` returns a polynomial with leading monomial z^nu and all other
    monomials below nu.  Coefficients are extracted top-down along the linear
    extension.  Returns (coefficients, residual); a nonzero residual means a
    leading monomial fell outside ``allowed``.
    """
    allowed = set(allowed)
    coeffs = {}
    rest = poly
    while rest:
        top = max(rest.terms, key=order_key)
        if top not in allowed:
            return coeffs, rest
        c = rest.terms[top]
        coeffs[top] = c
        rest = rest - basis(top).scale(c)
    return coeffs, rest


def expand_E_in_f(mu, f_basis):
    """Coefficients c_{mu,nu} of E_mu = sum_nu c_{mu,nu} f_nu."""
    mu = tuple(mu)
    coeffs, rest = triangular_expand(nonsymmetric_macdonald(mu), f_basis, sector(mu))
    if rest:
        raise InternalError(f"E_{mu} does not expand within its sector")
    return coeffs


def expand_f_in_E(mu, f_basis):
    """Coefficients d_{mu,nu} of f_mu = sum_nu d_{mu,nu} E_nu."""
    mu = tuple(mu)
    coeffs, rest = triangular_expand(f_basis(mu), nonsymmetric_macdonald, sector(mu))
    if rest:
        raise InternalError(f"f_{mu} does not expand within its sector")
    return coeffs


def transition_matrices(delta, f_basis):
    """(c, d) as dicts keyed by (mu, nu) over the sector of delta."""
    sec = sector(antidominant(delta))
    c, d = {}, {}
    for mu in sec:
        for nu, v in expand_E_in_f(mu, f_basis).items():
            c[mu, nu] = v
        for nu, v in expand_f_in_E(mu, f_basis).items():
            d[mu, nu] = v
    return sec, c, d


def verify_transition_inverse(delta, f_basis):
    sec, c, d = transition_matrices(delta, f_basis)
    rep = CheckReport(f"c.d = 1 on sector {antidominant(delta)}")
    for a in sec:
        for b in sec:
            s = ZERO
            for k in sec:
                x, y = c.get((a, k)), d.get((k, b))
                if x is not None and y is not None:
                    s = s + x * y
            rep.record(s == (ONE if a == b else ZERO), (a, b))
    return rep
