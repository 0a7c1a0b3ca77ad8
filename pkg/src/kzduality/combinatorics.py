"""
Compositions, orders on them, spectral vectors and resonance data.

A composition is a tuple of non-negative ints indexed 1..n in the math
and 0..n-1 in code.  Permutations are in one-line notation with values
1..n and act by ``(w . v)_i = v_{w^{-1}(i)}``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .ratfunc import monomial


def dominant(mu):
    """mu^+, the decreasing rearrangement."""
    return tuple(sorted(mu, reverse=True))


def antidominant(mu):
    """mu^-, the increasing rearrangement."""
    return tuple(sorted(mu))


def partial_sums(mu):
    out, s = [], 0
    for x in mu:
        s += x
        out.append(s)
    return out


def dominates(mu, nu):
    """True when mu >= nu in dominance order (all partial sums)."""
    return all(a >= b for a, b in zip(partial_sums(mu), partial_sums(nu)))


def _strictly_dominates(mu, nu):
    return mu != nu and dominates(mu, nu)


def prec_compare(mu, nu):
    """Compare under the Macdonald order: 'less', 'greater', 'equal' or 'incomparable'."""
    mu, nu = tuple(mu), tuple(nu)
    if mu == nu:
        return "equal"
    mp, np_ = dominant(mu), dominant(nu)
    if mp != np_:
        if _strictly_dominates(mp, np_):
            return "greater"
        if _strictly_dominates(np_, mp):
            return "less"
        return "incomparable"
    if _strictly_dominates(mu, nu):
        return "greater"
    if _strictly_dominates(nu, mu):
        return "less"
    return "incomparable"


def precedes(nu, mu):
    """nu strictly below mu."""
    return prec_compare(nu, mu) == "less"


def order_key(mu):
    """Sort key of a linear extension of the Macdonald order.

    Lexicographic order refines dominance, so comparing (mu^+, mu)
    lexicographically is compatible with the partial order.
    """
    return (dominant(mu), tuple(mu))


def min_permutation(mu):
    """Return (w_mu, rho(mu)) with w_mu the shortest w such that mu = w . mu^+.

    The j-th occurrence of a value in mu is matched with its j-th occurrence
    in mu^+, which yields the shortest permutation.
    """
    mu = tuple(mu)
    plus = dominant(mu)
    slots = {}
    for idx, v in enumerate(plus, start=1):
        slots.setdefault(v, []).append(idx)
    used = {}
    winv = []
    for v in mu:
        j = used.get(v, 0)
        winv.append(slots[v][j])
        used[v] = j + 1
    w = [0] * len(mu)
    for i, a in enumerate(winv, start=1):
        w[a - 1] = i
    return tuple(w), tuple(-a for a in winv)


def rho(mu):
    return min_permutation(mu)[1]


def spectral_exponents(mu):
    """Exponent pairs (a_i, b_i) with y_i(mu) = q^a_i t^b_i."""
    n = len(mu)
    r = rho(mu)
    return tuple((mu[i], r[i] + n - i) for i in range(n))


def spectral_vector(mu):
    """Eigenvalues y_i(mu) = q^{mu_i} t^{rho_i + n - i + 1} as RatFunc values."""
    return tuple(monomial(a, b) for a, b in spectral_exponents(mu))


def staircase(mu, m):
    """S_m(mu) = m*mu - rho(mu); m may be a Fraction."""
    r = rho(mu)
    m = Fraction(m)
    return tuple(_num(m * a - b) for a, b in zip(mu, r))


def _num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


def multiset_permutations(items):
    """Distinct permutations of ``items`` in lexicographic order."""
    items = sorted(items)
    n = len(items)
    if n == 0:
        yield ()
        return
    a = list(items)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


@lru_cache(maxsize=None)
def sector(mu):
    """All distinct rearrangements of mu, sorted by the linear extension."""
    return tuple(sorted(multiset_permutations(mu), key=order_key))


def partitions(total, parts, max_part=None):
    """Partitions of ``total`` into at most ``parts`` parts, padded with zeros."""
    if max_part is None:
        max_part = total
    out = []

    def rec(rem, k, bound, acc):
        if k == 0:
            if rem == 0:
                out.append(tuple(acc))
            return
        for x in range(min(rem, bound), -1, -1):
            if x * k < rem:
                break
            rec(rem - x, k - 1, x, acc + [x])

    rec(total, parts, max_part, [])
    return out


def compositions(n, weight, max_part=None):
    """All compositions with n parts summing to ``weight``."""
    out = []
    for lam in partitions(weight, n, max_part):
        out.extend(sector(lam))
    return sorted(out)


def compositions_up_to(n, max_weight, max_part=None):
    out = []
    for w in range(max_weight + 1):
        out.extend(compositions(n, w, max_part))
    return out


@lru_cache(maxsize=None)
def monomial_cone(lam):
    """Compositions nu with |nu| = |lam| and nu^+ dominated by lam^+, sorted."""
    lam = dominant(lam)
    n = len(lam)
    out = []
    for part in partitions(sum(lam), n):
        if dominates(lam, part):
            out.extend(sector(part))
    return tuple(sorted(out, key=order_key))


def lower_set(mu):
    """{nu : nu <= mu} inside the monomial cone, sorted by the linear extension."""
    mu = tuple(mu)
    return tuple(nu for nu in monomial_cone(dominant(mu))
                 if nu == mu or precedes(nu, mu))


def rank(mu):
    return max(mu) if mu else 0


def positions(mu, species):
    """1-based sites where mu equals ``species``."""
    return tuple(i for i, v in enumerate(mu, start=1) if v == species)


def omega_stat(mu, nu):
    """#{i < j : mu_i < mu_j and nu_i = nu_j = 1}."""
    ones = [i for i, v in enumerate(nu) if v == 1]
    return sum(1 for i, j in combinations(ones, 2) if mu[i] < mu[j])


def indicator(mu, nu):
    """0 if some k has mu_k > nu_k = 0 or mu_k < nu_k = 2, else 1."""
    for a, b in zip(mu, nu):
        if (b == 0 and a > 0) or (b == 2 and a < 2):
            return 0
    return 1


def stats_omega_indicator(mu, nu):
    return omega_stat(mu, nu), indicator(mu, nu)


def crossing_chi(*position_lists):
    """#{x in X_i, y in X_j : i < j, x > y}."""
    total = 0
    for i in range(len(position_lists)):
        for j in range(i + 1, len(position_lists)):
            total += sum(1 for x in position_lists[i] for y in position_lists[j] if x > y)
    return total


# -- resonance ----------------------------------------------------------

def rank_one_shape(delta):
    """(r, m) if delta = (0^{n-m}, r^m) with r >= 1, else None."""
    delta = tuple(delta)
    if delta != antidominant(delta):
        return None
    vals = set(delta) - {0}
    if len(vals) != 1:
        return None
    r = vals.pop()
    return r, delta.count(r)


def rank_two_shape(delta):
    """(m1, m2) if delta = (0^{n-m1-m2}, 1^m1, 2^m2) with m2 >= 1, else None."""
    delta = tuple(delta)
    if delta != antidominant(delta) or not set(delta) <= {0, 1, 2} or 2 not in delta:
        return None
    return delta.count(1), delta.count(2)


def resonant_target(delta, m=None, p=None):
    """The anti-partition epsilon paired with delta at q = t^(-m) (simple pole).

    Two families are recognized:

    * delta = (0^{n-m}, r^m) gives epsilon = (0^{n-rm}, 1^{rm});
    * delta = (0^{n-m1-m2}, 1^m1, 2^m2) with m = p + m1 and
      1 <= p <= min(n - m1 - m2, m2) gives
      epsilon = (0^{n-m1-m2-p}, 1^{m1+2p}, 2^{m2-p}).

    Here p is the rank-two sector parameter, not a pole order.  Returns
    (epsilon, m, p) with p = None for the first family.
    """
    delta = tuple(delta)
    n = len(delta)
    one = rank_one_shape(delta)
    two = rank_two_shape(delta)
    if one is not None and p is None and m in (None, one[1]):
        r, mm = one
        if n - r * mm >= 0:
            return (0,) * (n - r * mm) + (1,) * (r * mm), mm, None
    if two is not None:
        m1, m2 = two
        if p is None and m is None:
            raise ValueError("need m or p for a rank-two shape")
        if p is None:
            p = m - m1
        if m is None:
            m = p + m1
        if m != p + m1:
            raise ValueError(f"m={m} incompatible with p={p}, m1={m1}")
        if not 1 <= p <= min(n - m1 - m2, m2):
            raise ValueError(f"p={p} out of range for {delta}")
        eps = (0,) * (n - m1 - m2 - p) + (1,) * (m1 + 2 * p) + (2,) * (m2 - p)
        return eps, m, p
    raise ValueError(f"no resonance rule for delta={delta}, m={m}, p={p}")


def resonant_compositions(delta, m):
    """All nu strictly below delta with S_m(nu) = S_m(delta)."""
    delta = tuple(delta)
    target = staircase(delta, m)
    return [nu for nu in lower_set(delta)
            if nu != delta and max(nu) <= rank(delta) and staircase(nu, m) == target]


def resonant_sector(delta, m=None, p=None, generic=False):
    """Target sectors (as anti-partitions) for delta at q = t^(-m).

    With ``generic=False`` the closed rules of ``resonant_target`` are used
    (``p`` is the rank-two sector parameter).  With ``generic=True`` the
    answer is found by searching for staircase coincidences below delta.
    """
    if not generic:
        return [resonant_target(delta, m, p)[0]]
    if m is None:
        m = resonant_target(delta, m, p)[1]
    return sorted({antidominant(nu) for nu in resonant_compositions(delta, m)})


def t_exponent_positions(nu, xs, ys=()):
    """Exponent sum used by the positional duality functions."""
    ex = sum(sum(1 for i in range(x - 1) if nu[i] >= 1) for x in xs)
    ey = sum(sum(1 for i in range(y - 1) if nu[i] == 1) for y in ys if nu[y - 1] == 1)
    return ex + ey


def reorder(mu, mode="dominant"):
    if mode == "dominant":
        return dominant(mu)
    if mode == "antidominant":
        return antidominant(mu)
    raise ValueError(f"unknown mode {mode!r}")


min_perm_and_rho = min_permutation
sector_enumerate = sector
