"""
Reduction of ASEP polynomials at q = t^(-m) and the resulting
duality coefficients psi(nu, mu; t).

    Coeff_p[f_mu, m] = sum_{nu in sigma(epsilon)} psi(nu, mu; t) f_nu(z; t^-m, t)

The expansion is computed by triangular extraction in the specialized basis
and compared against the closed forms  psi = d(t) t^Omega(mu, nu) I(mu, nu).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .asep_poly import asep_polynomial
from .combinatorics import (antidominant, crossing_chi, indicator, omega_stat, positions,
                            resonant_sector, resonant_target, sector)
from .macdonald import nonsymmetric_macdonald, triangular_expand
from .ratfunc import ONE, ZERO, NotRegular, PoleOrderExceeded, RatFunc, t_pow
from .zpoly import ZPoly, coeff_p_poly


class NonzeroResidual(ArithmeticError):
    def __init__(self, residual):
        super().__init__(f"expansion leaves a nonzero residual: {residual}")
        self.residual = residual


def specialize(f, m):
    """f at q = t^(-m); for m = a/b the result is in s = t^(1/b)."""
    m = Fraction(m)
    if m.denominator != 1:
        f = f.map_coefficients(lambda c: c.map_t_exponents(m.denominator))
    return f.specialize(m.numerator)


@lru_cache(maxsize=None)
def specialized_asep(nu, m):
    return specialize(asep_polynomial(tuple(nu)), m)


@lru_cache(maxsize=None)
def specialized_macdonald(nu, m):
    return specialize(nonsymmetric_macdonald(tuple(nu)), m)


def target_sectors(mu, m):
    delta = antidominant(mu)
    try:
        return resonant_sector(delta, m)
    except ValueError:
        return resonant_sector(delta, m, generic=True)


def reduce_expand(mu, m, order=1, targets=None):
    """psi(nu, mu) for nu in the target sector(s), as {nu: RatFunc in t}.

    ``order`` is the pole order p in Coeff_p; the reduction theorems use 1.
    """
    mu = tuple(mu)
    g = coeff_p_poly(asep_polynomial(mu), m, order)
    if targets is None:
        targets = target_sectors(mu, m)
    allowed = [nu for eps in targets for nu in sector(tuple(eps))]
    coeffs, rest = triangular_expand(g, lambda nu: specialized_asep(nu, m), allowed)
    if rest:
        raise NonzeroResidual(rest)
    return {nu: coeffs.get(nu, ZERO) for nu in allowed}


# -- closed forms -----------------------------------------------------

def psi_closed(nu, mu):
    """t^Omega(mu, nu) I(mu, nu) (without the sector constant d(t))."""
    if not indicator(mu, nu):
        return ZERO
    return t_pow(omega_stat(mu, nu))


def psi_rank1(nu, mu, r=None):
    return psi_closed(nu, mu)


def psi_rank2(nu, mu):
    return psi_closed(nu, mu)


def d_rank_two(m1, p):
    """Sector constant for the rank-two reduction.

    Includes the factor (1 - t^-p) coming from the prefactor (1 - q t^m1) of
    the matrix product formula evaluated at q = t^-(p + m1).
    """
    sign = -1 if p % 2 else 1
    return (ONE - t_pow(-p)) * sign * t_pow(-p * m1 - p * (p - 1) // 2)


def psi_positions(nu, *species):
    """Positional form of the local duality function.

    ``species[0]`` lists the sites of 1-particles (or of all particles in the
    rank-one case) and ``species[1]`` those of 2-particles.  nu is indexed
    from site 1; sites outside nu are empty.
    """
    xs = species[0]
    ys = species[1] if len(species) > 1 else ()
    get = (lambda i: nu[i - 1] if 1 <= i <= len(nu) else 0)
    mu = {x: 1 for x in xs}
    mu.update({y: 2 for y in ys})
    for k, v in mu.items():
        if get(k) == 0:
            return ZERO
    for k in range(1, len(nu) + 1):
        if get(k) == 2 and mu.get(k, 0) < 2:
            return ZERO
    e = 0
    for x in xs:
        e += sum(1 for i in range(1, x) if get(i) >= 1)
    for y in ys:
        if get(y) == 1:
            e += sum(1 for i in range(1, y) if get(i) == 1)
    return t_pow(e - crossing_chi(tuple(xs), tuple(ys)))


def H_observable(nu, *species):
    """prod_j prod_{x in X_j} prod_{i <= x} t^{nu_i} * t^(-chi)."""
    e = 0
    for xs in species:
        for x in xs:
            e += sum(nu[i - 1] for i in range(1, min(x, len(nu)) + 1))
    return t_pow(e - crossing_chi(*[tuple(s) for s in species]))


# -- tables -----------------------------------------------------------

@dataclass
class PsiTable:
    """psi(nu, mu) over sigma(epsilon) x sigma(delta); ``p`` is the rank-two
    sector parameter (None for the (0, r) family)."""

    delta: tuple
    epsilon: tuple
    m: object
    p: int | None
    entries: dict = field(default_factory=dict)
    common_factor: RatFunc | None = None
    consistent: bool = False

    def rows(self):
        return sorted({mu for (_, mu) in self.entries})

    def cols(self):
        return sorted({nu for (nu, _) in self.entries})


def psi_table(delta, m=None, p=None):
    """Full table psi(nu, mu) over sigma(epsilon) x sigma(delta) with measured d(t)."""
    delta = antidominant(delta)
    eps, m, p = resonant_target(delta, m, p)
    table = PsiTable(delta, eps, m, p)
    for mu in sector(delta):
        for nu, v in reduce_expand(mu, m, targets=[eps]).items():
            table.entries[nu, mu] = v
    table.common_factor, table.consistent = measure_common_factor(table.entries)
    return table


def measure_common_factor(entries, closed=psi_closed):
    """Return (d, ok): ok iff entries == d * closed(nu, mu) for one d(t)."""
    d = None
    ok = True
    for (nu, mu), v in entries.items():
        c = closed(nu, mu)
        if not c:
            ok = ok and not v
            continue
        ratio = v / c
        if d is None:
            d = ratio
        elif ratio != d:
            ok = False
    return d, ok and d is not None and bool(d)


# -- conjecture probe -------------------------------------------------

@dataclass
class ProbeResult:
    mu: tuple
    m: int
    p: int
    status: str
    nu: tuple | None = None
    alpha: RatFunc | None = None
    pole_order: int | None = None
    candidates: int = 0


def conjecture_probe(mu, m, p):
    """Look for nu with Coeff_p[E_mu, m] proportional to E_nu(z; t^-m, t).

    status is 'confirmed' (unique nu found), 'zero' (coefficient vanishes),
    'pole-exceeded', or 'no-match'.
    """
    mu = tuple(mu)
    E = nonsymmetric_macdonald(mu)
    try:
        g = coeff_p_poly(E, m, p)
    except PoleOrderExceeded as exc:
        return ProbeResult(mu, m, p, "pole-exceeded", pole_order=exc.order)
    if not g:
        return ProbeResult(mu, m, p, "zero")
    hits = []
    from .combinatorics import compositions
    for nu in compositions(len(mu), sum(mu), max(mu)):
        if nu not in g.terms:
            continue
        try:
            En = specialized_macdonald(nu, m)
        except NotRegular:
            continue
        alpha = g.terms[nu] / En.coefficient(nu)
        if g == En.scale(alpha):
            hits.append((nu, alpha))
    if len(hits) == 1:
        return ProbeResult(mu, m, p, "confirmed", hits[0][0], hits[0][1], candidates=1)
    return ProbeResult(mu, m, p, "no-match" if not hits else "ambiguous",
                       candidates=len(hits))


# -- position notation --------------------------------------------------

def exponent_identity(mu, nu):
    """Both sides of the rank-two exponent identity for a valid pair (mu, nu).

    lhs = Omega + m1(m1-1)/2 + p(p-1)/2 + chi(x, y),
    rhs = sum_x #{i < x: nu_i >= 1} + sum_y [nu_y = 1] #{i < y: nu_i = 1}.
    """
    m1 = mu.count(1)
    p = sum(1 for a, b in zip(mu, nu) if a == 2 and b == 1)
    xs, ys = positions(mu, 1), positions(mu, 2)
    lhs = omega_stat(mu, nu) + m1 * (m1 - 1) // 2 + p * (p - 1) // 2 + crossing_chi(xs, ys)
    rhs = sum(sum(1 for i in range(x - 1) if nu[i] >= 1) for x in xs)
    rhs += sum(sum(1 for i in range(y - 1) if nu[i] == 1) for y in ys if nu[y - 1] == 1)
    return lhs, rhs


def exponent_pairs(n):
    """All (mu, nu) of length n in paired rank-two sectors with I(mu, nu) = 1."""
    for m2 in range(1, n + 1):
        for m1 in range(0, n - m2 + 1):
            delta = (0,) * (n - m1 - m2) + (1,) * m1 + (2,) * m2
            for p in range(0, min(n - m1 - m2, m2) + 1):
                eps = (0,) * (n - m1 - m2 - p) + (1,) * (m1 + 2 * p) + (2,) * (m2 - p)
                for mu in sector(delta):
                    for nu in sector(eps):
                        if indicator(mu, nu):
                            yield mu, nu


def verify_exponent_identity(n_max=6):
    from .report import CheckReport
    rep = CheckReport(f"exponent identity n<={n_max}")
    for n in range(1, n_max + 1):
        for mu, nu in exponent_pairs(n):
            lhs, rhs = exponent_identity(mu, nu)
            rep.record(lhs == rhs, (mu, nu, lhs, rhs))
    return rep


def verify_psi_vs_positions(n_max=6):
    """psi_rank1(nu, mu) = t^(-m(m-1)/2) psi_positions(nu, x(mu)) on rank-one pairs."""
    from .report import CheckReport
    rep = CheckReport(f"psi vs positions n<={n_max}")
    for n in range(1, n_max + 1):
        for r in (1, 2, 3):
            for m in range(1, n // r + 1):
                delta = (0,) * (n - m) + (r,) * m
                eps = (0,) * (n - r * m) + (1,) * (r * m)
                for mu in sector(delta):
                    xs = positions(mu, r)
                    for nu in sector(eps):
                        lhs = psi_rank1(nu, mu, r)
                        rhs = t_pow(-m * (m - 1) // 2) * psi_positions(nu, xs)
                        rep.record(lhs == rhs, (nu, mu))
    return rep
