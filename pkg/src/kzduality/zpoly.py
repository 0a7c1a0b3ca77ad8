"""
Polynomials in z_1..z_n with coefficients in Q(q, t).

Exponent vectors are tuples of non-negative ints.  Instances are treated as
immutable; every operation returns a new polynomial.
"""
from __future__ import annotations

from fractions import Fraction

from .ratfunc import ONE, ZERO, RatFunc, coeff_p_scalar, format_laurent, monomial


class ZPoly:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has wrong length for n={n}")
            c = RatFunc(c)
            if c:
                self.terms[e] = c

    @classmethod
    def _wrap(cls, n, terms):
        p = cls.__new__(cls)
        p.n = n
        p.terms = terms
        return p

    @classmethod
    def zero(cls, n):
        return cls._wrap(n, {})

    @classmethod
    def one(cls, n):
        return cls._wrap(n, {(0,) * n: ONE})

    @classmethod
    def monomial(cls, exp, coeff=ONE):
        coeff = RatFunc(coeff)
        exp = tuple(exp)
        return cls._wrap(len(exp), {exp: coeff} if coeff else {})

    @classmethod
    def variable(cls, i, n):
        """The variable z_i (1-based)."""
        e = [0] * n
        e[i - 1] = 1
        return cls.monomial(e)

    # -- basic queries --------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), ZERO)

    def support(self):
        return sorted(self.terms)

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def __eq__(self, other):
        if isinstance(other, ZPoly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction, RatFunc)):
            return self == ZPoly.one(self.n) * other
        return NotImplemented

    __hash__ = None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, ZPoly):
            other = ZPoly.one(self.n) * other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return ZPoly._wrap(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return ZPoly._wrap(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, ZPoly):
            other = ZPoly.one(self.n) * other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = RatFunc(c)
        if not c:
            return ZPoly.zero(self.n)
        if c == ONE:
            return self
        return ZPoly._wrap(self.n, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, ZPoly):
            return self.scale(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return ZPoly._wrap(self.n, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return self.scale(ONE / RatFunc(c))

    def mul_variable(self, i):
        """Multiply by z_i (1-based)."""
        k = i - 1
        return ZPoly._wrap(self.n, {e[:k] + (e[k] + 1,) + e[k + 1:]: c
                                    for e, c in self.terms.items()})

    def map_coefficients(self, fn):
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return ZPoly._wrap(self.n, out)

    def permute_exponents(self, fn, coeff_fn=None):
        out = {}
        for e, c in self.terms.items():
            e2 = fn(e)
            if coeff_fn is not None:
                c = c * coeff_fn(e)
            v = out.get(e2)
            out[e2] = c if v is None else v + c
        return ZPoly._wrap(self.n, {e: c for e, c in out.items() if c})

    def swap(self, i):
        """Apply s_i: exchange z_i and z_{i+1} (1-based)."""
        k = i - 1
        return ZPoly._wrap(self.n, {e[:k] + (e[k + 1], e[k]) + e[k + 2:]: c
                                    for e, c in self.terms.items()})

    def evaluate(self, z, q, t):
        """Numeric value at rational points."""
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c.evaluate(q, t)
            for zi, a in zip(z, e):
                v *= Fraction(zi) ** a
            total += v
        return total

    def specialize(self, m):
        """Set q = t^(-m); raises NotRegular if a coefficient has a pole there."""
        return self.map_coefficients(lambda c: c.at_q_power_of_t(m))

    # -- printing -------------------------------------------------------
    def __repr__(self):
        return f"ZPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(f"z{i + 1}" if a == 1 else f"z{i + 1}^{a}"
                            for i, a in enumerate(e) if a)
            cs = str(c)
            if c.is_laurent() and len(c.numerator_terms()) > 1:
                cs = f"({cs})"
            elif not c.is_laurent():
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif c == ONE:
                parts.append(mono)
            elif c == -ONE:
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def extract_z_coefficient(f, exp):
    return f.coefficient(exp)


def coeff_p_poly(f, m, p):
    """Apply coeff_p_scalar to every coefficient of f."""
    return f.map_coefficients(lambda c: coeff_p_scalar(c, m, p))


def z_monomial(exp, coeff=1):
    return ZPoly.monomial(exp, coeff)


__all__ = ["ZPoly", "extract_z_coefficient", "coeff_p_poly", "z_monomial",
           "format_laurent", "monomial"]
