"""
The t-boson algebra and its twisted trace.

Generators act on l^2(N) with basis |i>, i >= 0:

    k |i> = t^i |i>,   phi |i+1> = (1 - t^{i+1}) |i>,   phi^dag |i> = |i+1>

so that  phi phi^dag = 1 - t k,  phi^dag phi = 1 - k,  k phi = t^{-1} phi k,
k phi^dag = t phi^dag k.  Every word reduces to a combination of
phi^dag^a k^b phi^c with a*c = 0, stored as {(a, b, c): RatFunc}.  The trace
Tr(X k^u) with q = t^u only sees a = c = 0 terms and
Tr(k^b k^{ju}) = 1 / (1 - q^j t^b).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .ratfunc import ONE, ZERO, RatFunc, monomial, t_pow

PHI, K, PHIDAG = "phi", "k", "phidag"


def _add(out, key, c):
    v = out.get(key)
    v = c if v is None else v + c
    if v:
        out[key] = v
    elif key in out:
        del out[key]


def _times_letter(nf, letter):
    out = {}
    for (a, b, c), x in nf.items():
        if letter == PHI:
            if a > 0 and c == 0:
                # k^b phi = t^-b phi k^b and phi^dag phi = 1 - k
                s = t_pow(-b) * x
                _add(out, (a - 1, b, 0), s)
                _add(out, (a - 1, b + 1, 0), -s)
            else:
                _add(out, (a, b, c + 1), x)
        elif letter == K:
            _add(out, (a, b + 1, c), t_pow(c) * x)
        elif letter == PHIDAG:
            if c >= 1:
                _add(out, (a, b, c - 1), x)
                _add(out, (a, b + 1, c - 1), -t_pow(c) * x)
            else:
                _add(out, (a + 1, b, 0), t_pow(b) * x)
        else:
            raise ValueError(f"unknown letter {letter!r}")
    return out


def normal_form(word, scalar=ONE):
    """Normal form of a word (sequence of 'phi', 'k', 'phidag')."""
    nf = {(0, 0, 0): RatFunc(scalar)}
    for letter in word:
        nf = _times_letter(nf, letter)
    return nf


def _times_basis(nf, key):
    a, b, c = key
    word = [PHIDAG] * a + [K] * b + [PHI] * c
    out = nf
    for letter in word:
        out = _times_letter(out, letter)
    return out


def nf_mul(x, y):
    out = {}
    for key, cy in y.items():
        for k2, v in _times_basis(x, key).items():
            _add(out, k2, v * cy)
    return out


def nf_add(x, y):
    out = dict(x)
    for k, v in y.items():
        _add(out, k, v)
    return out


def nf_scale(x, c):
    c = RatFunc(c)
    return {k: v * c for k, v in x.items()} if c else {}


def trace_basis(key, j=1):
    """Tr(phi^dag^a k^b phi^c k^{ju}) with q = t^u."""
    a, b, c = key
    if a or c:
        return ZERO
    return ONE / (ONE - monomial(j, b))


def trace(nf, j=1):
    s = ZERO
    for key, v in nf.items():
        if key[0] == 0 and key[2] == 0:
            s = s + v * trace_basis(key, j)
    return s


# -- tensor products --------------------------------------------------

def tensor_mul(x, y):
    """Product of elements of a tensor power, keyed by tuples of (a, b, c)."""
    out = {}
    for kx, vx in x.items():
        for ky, vy in y.items():
            factors = [list(nf_mul({fx: ONE}, {fy: ONE}).items()) for fx, fy in zip(kx, ky)]
            base = vx * vy
            for combo in product(*factors):
                v = base
                for _, c in combo:
                    v = v * c
                _add(out, tuple(k for k, _ in combo), v)
    return out


def tensor_trace(x, twists):
    """Tr over each factor with factor f twisted by k^{twists[f] u}."""
    s = ZERO
    for key, v in x.items():
        term = v
        for fk, j in zip(key, twists):
            if fk[0] or fk[2]:
                term = ZERO
                break
            term = term * trace_basis(fk, j)
        if term:
            s = s + term
    return s


# -- numeric oracle ---------------------------------------------------

def truncated_matrices(size, t):
    """Fraction matrices of (phi, k, phidag) truncated to |0>..|size-1>."""
    t = Fraction(t)
    phi = [[Fraction(0)] * size for _ in range(size)]
    phidag = [[Fraction(0)] * size for _ in range(size)]
    k = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        k[i][i] = t ** i
        if i + 1 < size:
            phi[i][i + 1] = 1 - t ** (i + 1)
            phidag[i + 1][i] = Fraction(1)
    return {PHI: phi, K: k, PHIDAG: phidag}


def numeric_trace(word, q, t, size=40, j=1):
    """Truncated numeric Tr(word k^{ju}) with q = t^u, for cross-checks.

    Only the diagonal is needed; the truncation error is O(q^(j*size)).
    """
    mats = truncated_matrices(size, t)
    q = Fraction(q)
    # propagate basis vectors through the word (matrices are sparse)
    total = Fraction(0)
    for i in range(size):
        vec = {i: Fraction(1)}
        for letter in reversed(word):
            m = mats[letter]
            new = {}
            for col, val in vec.items():
                for row in range(max(0, col - 1), min(size, col + 2)):
                    if m[row][col]:
                        new[row] = new.get(row, 0) + m[row][col] * val
            vec = new
        total += vec.get(i, 0) * q ** (j * i)
    return total
