"""
Exact arithmetic in the field Q(q, t).

An element is stored as ``t^s * num / den`` with ``num, den`` integer
polynomials in ``q, t`` (via python-flint), neither divisible by ``t``,
coprime, and ``den`` with positive leading coefficient in (q, t)-lex
order.  This form is canonical, so equality is structural.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import flint

CTX = flint.fmpz_mpoly_ctx.get(("q", "t"), "lex")
_QP, _TP = CTX.gens()
_ONE_P = CTX.constant(1)
_ZERO_P = CTX.constant(0)


class PoleOrderExceeded(ArithmeticError):
    """Raised when a coefficient has a pole of order larger than requested."""

    def __init__(self, order, p, m):
        super().__init__(f"pole of order {order} at q = t^(-{m}) exceeds p = {p}")
        self.order = order
        self.p = p
        self.m = m


class NotRegular(ArithmeticError):
    pass


@lru_cache(maxsize=None)
def _tpoly(k):
    return _TP ** k


def _tdeg_content(p):
    return int(p.term_content().degrees()[1])


def _poly_from_terms(terms):
    """Integer polynomial from {(dq, dt): int}; dt may be negative, returns (poly, shift)."""
    if not terms:
        return _ZERO_P, 0
    s = min(dt for (_, dt) in terms)
    return CTX.from_dict({(dq, dt - s): c for (dq, dt), c in terms.items() if c}), s


class RatFunc:
    """Element of Q(q, t) in canonical form."""

    __slots__ = ("num", "den", "tpow")

    def __init__(self, value=0):
        if isinstance(value, RatFunc):
            self.num, self.den, self.tpow = value.num, value.den, value.tpow
            return
        value = Fraction(value)
        self.num = CTX.constant(value.numerator)
        self.den = CTX.constant(value.denominator)
        self.tpow = 0
        if value == 0:
            self.num = _ZERO_P

    @classmethod
    def _raw(cls, num, den, tpow):
        r = cls.__new__(cls)
        r.num = num
        r.den = den
        r.tpow = tpow
        return r

    @classmethod
    def _make(cls, num, den, tpow):
        if num.is_zero():
            return ZERO
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num = num / g
                den = den / g
            if den.leading_coefficient() < 0:
                num = -num
                den = -den
            k = _tdeg_content(den)
            if k:
                den = den / _tpoly(k)
                tpow -= k
        k = _tdeg_content(num)
        if k:
            num = num / _tpoly(k)
            tpow += k
        return cls._raw(num, den, tpow)

    @classmethod
    def from_polys(cls, num, den=None, tpow=0):
        return cls._make(num, _ONE_P if den is None else den, tpow)

    @classmethod
    def from_terms(cls, terms, den_terms=None):
        """Build from Laurent term dicts {(deg_q, deg_t): coeff}; coefficients may be Fractions."""
        num_terms = {k: Fraction(v) for k, v in terms.items() if v}
        den_terms = {(0, 0): Fraction(1)} if den_terms is None else {
            k: Fraction(v) for k, v in den_terms.items() if v}
        if not den_terms:
            raise ZeroDivisionError("zero denominator")
        lcm = 1
        for v in list(num_terms.values()) + list(den_terms.values()):
            lcm = lcm * v.denominator // _gcd(lcm, v.denominator)
        a, sa = _poly_from_terms({k: int(v * lcm) for k, v in num_terms.items()})
        b, sb = _poly_from_terms({k: int(v * lcm) for k, v in den_terms.items()})
        return cls._make(a, b, sa - sb)

    @staticmethod
    def q():
        return Q

    @staticmethod
    def t():
        return T

    # -- predicates ---------------------------------------------------------
    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self):
        return self.num.is_zero()

    def is_laurent(self):
        return self.den.is_constant()

    def is_constant(self):
        return self.tpow == 0 and self.num.is_constant() and self.den.is_constant()

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc(other)
            except (TypeError, ValueError):
                return NotImplemented
        return (self.tpow == other.tpow and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.tpow, tuple(sorted(self.num.to_dict().items())),
                     tuple(sorted(self.den.to_dict().items()))))

    # -- arithmetic ---------------------------------------------------------
    def __neg__(self):
        return RatFunc._raw(-self.num, self.den, self.tpow)

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        s = min(self.tpow, other.tpow)
        a = self.num if self.tpow == s else self.num * _tpoly(self.tpow - s)
        b = other.num if other.tpow == s else other.num * _tpoly(other.tpow - s)
        if self.den == other.den:
            return RatFunc._make(a + b, self.den, s)
        g = self.den.gcd(other.den)
        if g.is_one():
            return RatFunc._make(a * other.den + b * self.den, self.den * other.den, s)
        d1 = self.den / g
        d2 = other.den / g
        return RatFunc._make(a * d2 + b * d1, self.den * d2, s)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        tp = self.tpow + other.tpow
        if self.den.is_one() and other.den.is_one():
            return RatFunc._raw(self.num * other.num, _ONE_P, tp)
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        a = self.num if g1.is_one() else self.num / g1
        d2 = other.den if g1.is_one() else other.den / g1
        b = other.num if g2.is_one() else other.num / g2
        d1 = self.den if g2.is_one() else self.den / g2
        num = a * b
        den = d1 * d2
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatFunc._raw(num, den, tp)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatFunc._raw(num, den, -self.tpow)

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return ONE
        return RatFunc._raw(self.num ** k, self.den ** k, self.tpow * k)

    # -- views --------------------------------------------------------------
    def numerator_terms(self):
        """Laurent terms of ``t^s * num`` as {(dq, dt): int}."""
        return {(int(a), int(b) + self.tpow): int(c) for (a, b), c in self.num.to_dict().items()}

    def denominator_terms(self):
        return {(int(a), int(b)): int(c) for (a, b), c in self.den.to_dict().items()}

    def laurent_terms(self):
        """Terms {(deg_q, deg_t): Fraction} of a Laurent polynomial."""
        if not self.den.is_constant():
            raise ValueError(f"{self} is not a Laurent polynomial")
        d = int(self.den.leading_coefficient())
        return {k: Fraction(c, d) for k, c in self.numerator_terms().items()}

    def as_fraction(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        if self.num.is_zero():
            return Fraction(0)
        return Fraction(int(self.num.leading_coefficient()), int(self.den.leading_coefficient()))

    def q_degree_bounds(self):
        return self.num.degrees()[0], self.den.degrees()[0]

    def evaluate(self, q, t):
        """Numeric value at exact rationals ``q, t``."""
        q = Fraction(q)
        t = Fraction(t)
        num = sum(Fraction(c) * q ** a * t ** b for (a, b), c in self.numerator_terms().items())
        den = sum(Fraction(c) * q ** a * t ** b for (a, b), c in self.denominator_terms().items())
        return num / den

    def map_t_exponents(self, scale):
        """Substitute ``t -> t^scale`` for a positive integer ``scale``."""
        num, sn = _poly_from_terms({(a, b * scale): c for (a, b), c in self.numerator_terms().items()})
        den, sd = _poly_from_terms({(a, b * scale): c for (a, b), c in self.denominator_terms().items()})
        return RatFunc._make(num, den, sn - sd)

    # -- resonance ----------------------------------------------------------
    def _mult_of(self, poly, factor):
        k = 0
        while True:
            quo, rem = divmod(poly, factor)
            if not rem.is_zero():
                return k, poly
            poly = quo
            k += 1

    def pole_order(self, a):
        """Order of the pole along ``1 - q t^a`` (negative for a zero, -inf for 0)."""
        if self.num.is_zero():
            return -math.inf
        factor = _resonance_factor(a)
        kd, _ = self._mult_of(self.den, factor)
        kn, _ = self._mult_of(self.num, factor)
        return kd - kn

    def at_q_power_of_t(self, m):
        """Substitute ``q = t^(-m)`` for an integer ``m``; raises NotRegular on a pole."""
        num = _specialize(self.num, m)
        den = _specialize(self.den, m)
        if den[0].is_zero():
            raise NotRegular(f"pole at q = t^({-m})")
        if num[0].is_zero():
            return ZERO
        return RatFunc._make(num[0], den[0], self.tpow + num[1] - den[1])

    # -- printing -----------------------------------------------------------
    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        nt = self.numerator_terms()
        dt = self.denominator_terms()
        if dt[min(dt)] < 0:
            nt = {k: -v for k, v in nt.items()}
            dt = {k: -v for k, v in dt.items()}
        if self.den.is_constant():
            d = dt[(0, 0)]
            return format_laurent({k: Fraction(v, d) for k, v in nt.items()})
        num = format_laurent(nt)
        if len(nt) > 1:
            num = f"({num})"
        return f"{num}/({format_laurent(dt)})"


def _resonance_factor(a):
    return _ONE_P - _QP * _tpoly(a) if a >= 0 else _tpoly(-a) - _QP


def _specialize(poly, m):
    terms = {}
    for (a, b), c in poly.to_dict().items():
        e = int(b) - m * int(a)
        terms[(0, e)] = terms.get((0, e), 0) + int(c)
    terms = {k: v for k, v in terms.items() if v}
    return _poly_from_terms(terms)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc(x)
    return NotImplemented


def _fmt_monomial(a, b):
    parts = []
    if a:
        parts.append("q" if a == 1 else f"q^{a}")
    if b:
        parts.append("t" if b == 1 else f"t^{b}")
    return "*".join(parts)


def format_laurent(terms, names=None):
    """Human-readable form of {(deg_q, deg_t): coeff}, ascending degrees."""
    if not terms:
        return "0"
    out = ""
    for (a, b), c in sorted(terms.items()):
        c = Fraction(c)
        mono = _fmt_monomial(a, b)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if not out:
            out = body if sign == "+" else "-" + body
        else:
            out += sign + body
    return out


ZERO = RatFunc._raw(_ZERO_P, _ONE_P, 0)
ONE = RatFunc._raw(_ONE_P, _ONE_P, 0)
Q = RatFunc._raw(_QP, _ONE_P, 0)
T = RatFunc._raw(_ONE_P, _ONE_P, 1)


@lru_cache(maxsize=4096)
def monomial(dq, dt, c=1):
    """The element ``c * q^dq * t^dt``."""
    return RatFunc.from_terms({(dq, dt): c})


def t_pow(k):
    return monomial(0, k)


def gcd_qt(a, b):
    """Normalized gcd of two Laurent polynomials, up to units q^i t^j.

    The result is primitive with positive leading coefficient and carries
    no monomial factor; ``gcd_qt(0, 0) == 0``.
    """
    a = RatFunc(a)
    b = RatFunc(b)
    if not (a.is_laurent() and b.is_laurent()):
        raise ValueError("gcd_qt expects Laurent polynomials")
    if a.is_zero() and b.is_zero():
        return ZERO
    g = a.num.gcd(b.num)
    tc = g.term_content()
    g = g / tc
    if g.leading_coefficient() < 0:
        g = -g
    return RatFunc._make(g, _ONE_P, 0)


def coeff_p_scalar(c, m, p):
    """``lim_{q -> t^-m} (1 - q t^m)^p c``.

    ``m`` is an integer or a Fraction a/b.  For fractional ``m`` the result
    is expressed in ``s = t^(1/b)`` (printed as ``t``).  Returns ZERO when the
    pole order is below ``p`` and raises PoleOrderExceeded when above.
    """
    c = RatFunc(c)
    m = Fraction(m)
    if m.denominator != 1:
        c = c.map_t_exponents(m.denominator)
    a = m.numerator
    if c.is_zero():
        return ZERO
    k = c.pole_order(a)
    if k > p:
        raise PoleOrderExceeded(k, p, m)
    if k < p:
        return ZERO
    factor = _resonance_factor(a)
    den = c.den
    for _ in range(k):
        den = den / factor
    reduced = RatFunc._make(c.num, den, c.tpow)
    if a < 0:
        # t^(-a) - q = t^(-a) (1 - q t^a)
        reduced = reduced * t_pow(a * k)
    return reduced.at_q_power_of_t(a)
