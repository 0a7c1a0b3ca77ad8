"""
Polynomial representation of the affine Hecke algebra.

    T_i = t - (t z_i - z_{i+1}) / (z_i - z_{i+1}) (1 - s_i)
    omega g(z) = g(q z_n, z_1, ..., z_{n-1})
    Y_i = T_i ... T_{n-1} omega T_1^{-1} ... T_{i-1}^{-1}

Indices i are 1-based.  The divided difference is computed by exact
synthetic division, so no rational functions in z appear.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

from .ratfunc import ONE, Q, T, ZERO, RatFunc, monomial
from .report import CheckReport
from .zpoly import ZPoly


class InternalError(RuntimeError):
    pass


def divide_by_difference(g, i):
    """Exact quotient of g by (z_i - z_{i+1})."""
    a, b = i - 1, i
    buckets = {}
    for e, c in g.terms.items():
        buckets.setdefault(e[a], {})[e] = c
    quot = {}
    top = max(buckets, default=0)
    for d in range(top, 0, -1):
        layer = buckets.pop(d, None)
        if not layer:
            continue
        lower = buckets.setdefault(d - 1, {})
        for e, c in layer.items():
            eq = e[:a] + (d - 1,) + e[a + 1:]
            v = quot.get(eq)
            quot[eq] = c if v is None else v + c
            er = eq[:b] + (eq[b] + 1,) + eq[b + 1:]
            v = lower.get(er)
            lower[er] = c if v is None else v + c
    rest = buckets.get(0, {})
    if any(rest.values()):
        raise InternalError(f"polynomial not divisible by z_{i} - z_{i + 1}")
    return ZPoly._wrap(g.n, {e: c for e, c in quot.items() if c})


def demazure_lusztig(f, i, tt=T):
    """T_i with Hecke parameter ``tt`` (``tt = t`` is the operator proper)."""
    h = divide_by_difference(f - f.swap(i), i)
    return f.scale(tt) - h.mul_variable(i).scale(tt) + h.mul_variable(i + 1)


def hecke_T(f, i):
    return demazure_lusztig(f, i)


def hecke_T_inv(f, i):
    """T_i^{-1} = t^{-1} (T_i - (t - 1)), from the quadratic relation."""
    return (hecke_T(f, i) - f.scale(T - 1)).scale(ONE / T)


def hecke_T_inv_direct(f, i):
    """T_i^{-1} = t^{-1} - t^{-1} (t z_i - z_{i+1}) / (z_i - z_{i+1}) (1 - s_i)."""
    h = divide_by_difference(f - f.swap(i), i)
    return (f - h.mul_variable(i).scale(T) + h.mul_variable(i + 1)).scale(ONE / T)


def local_L(f, i):
    """The operator T_i - t."""
    return hecke_T(f, i) - f.scale(T)


def omega(f):
    n = f.n
    return f.permute_exponents(lambda e: e[1:] + e[:1], lambda e: Q ** e[0])


def omega_inv(f):
    return f.permute_exponents(lambda e: e[-1:] + e[:-1], lambda e: Q ** (-e[-1]))


def cherednik_Y(f, i):
    n = f.n
    g = f
    for j in range(i - 1, 0, -1):
        g = hecke_T_inv(g, j)
    g = omega(g)
    for j in range(n - 1, i - 1, -1):
        g = hecke_T(g, j)
    return g


@lru_cache(maxsize=None)
def cherednik_Y_monomial(exp, i):
    """Y_i applied to z^exp (cached)."""
    return cherednik_Y(ZPoly.monomial(exp), i)


def cherednik_Y_cached(f, i):
    out = ZPoly.zero(f.n)
    for e, c in f.terms.items():
        out = out + cherednik_Y_monomial(e, i).scale(c)
    return out


@dataclass(frozen=True)
class HeckeOp:
    """A word in the generators; ``word`` lists (kind, index) applied right to left.

    kind is one of 'T', 'Tinv', 'omega', 'omega_inv', 'Y', 'L'.
    """

    n: int
    word: tuple = field(default_factory=tuple)

    def __call__(self, f):
        for kind, i in reversed(self.word):
            f = _APPLY[kind](f, i)
        return f

    def __matmul__(self, other):
        return HeckeOp(self.n, self.word + other.word)


_APPLY = {
    "T": hecke_T,
    "Tinv": hecke_T_inv,
    "omega": lambda f, i: omega(f),
    "omega_inv": lambda f, i: omega_inv(f),
    "Y": cherednik_Y,
    "L": local_L,
}


def op(n, kind, i=0):
    return HeckeOp(n, ((kind, i),))


# -- verification ------------------------------------------------------

def monomials_up_to(n, degree):
    from .combinatorics import compositions_up_to
    return compositions_up_to(n, degree)


def random_poly(n, degree, rng, terms=4):
    """Random polynomial with small Laurent coefficients."""
    out = ZPoly.zero(n)
    for _ in range(terms):
        e = [0] * n
        for _ in range(rng.randint(0, degree)):
            e[rng.randrange(n)] += 1
        c = monomial(rng.randint(0, 2), rng.randint(-2, 2), rng.choice([-3, -2, -1, 1, 2, 5]))
        out = out + ZPoly.monomial(e, c)
    return out


def verify_hecke_relations(n, degree=3, samples=None, seed=0, T_impl=None, check_Y=True):
    """Check quadratic, braid, commutation, inverse and Y-commutation relations.

    Test vectors are all monomials of degree <= ``degree`` plus ``samples``
    random polynomials.  ``T_impl`` replaces T_i (to exercise failure paths).
    """
    Ti = T_impl or hecke_T
    rep = CheckReport(f"hecke n={n}")
    vectors = [ZPoly.monomial(e) for e in monomials_up_to(n, degree)]
    rng = random.Random(seed)
    for _ in range(samples or 0):
        vectors.append(random_poly(n, degree, rng))
    for f in vectors:
        for i in range(1, n):
            tf = Ti(f, i)
            lhs = Ti(tf, i) - tf.scale(T - 1) - f.scale(T)
            rep.record(lhs.is_zero(), ("quadratic", i, str(f)))
            inv = (tf - f.scale(T - 1)).scale(ONE / T)
            rep.record(Ti(inv, i) == f, ("inverse", i, str(f)))
            if i + 1 < n:
                a = Ti(Ti(Ti(f, i), i + 1), i)
                b = Ti(Ti(Ti(f, i + 1), i), i + 1)
                rep.record(a == b, ("braid", i, str(f)))
            for j in range(i + 2, n):
                rep.record(Ti(Ti(f, j), i) == Ti(tf, j), ("commute", i, j, str(f)))
        if check_Y and T_impl is None:
            ys = [cherednik_Y(f, i) for i in range(1, n + 1)]
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    rep.record(cherednik_Y(ys[j - 1], i) == cherednik_Y(ys[i - 1], j),
                               ("Y-commute", i, j, str(f)))
    return rep


def corrupted_T(f, i):
    """T_i with t replaced by t^2; used as a negative control."""
    return demazure_lusztig(f, i, T * T)


def apply(hop, f):
    """Apply a HeckeOp to a ZPoly."""
    if hop.n != f.n:
        raise ValueError(f"operator on {hop.n} variables applied to a polynomial in {f.n}")
    return hop(f)


L_op = local_L
