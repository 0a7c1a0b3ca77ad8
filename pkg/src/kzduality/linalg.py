"""
Fraction-free (Bareiss) elimination over Z[q, t^{+-1}].

Entries are RatFunc values; rows are scaled to polynomials first, after
which every intermediate entry stays a polynomial (checked).
"""
from __future__ import annotations

from .ratfunc import ONE, ZERO, RatFunc, t_pow


class EliminationError(ArithmeticError):
    pass


def _clear_row(row):
    """Scale a row of RatFuncs to Laurent polynomials with no negative t powers."""
    den = ONE
    for x in row:
        if x and not x.is_laurent():
            den = _lcm(den, x)
    row = [x * den for x in row] if den != ONE else list(row)
    low = min((x.tpow for x in row if x), default=0)
    if low < 0:
        row = [x * t_pow(-low) for x in row]
    return row


def _lcm(acc, x):
    """Accumulate a common multiple of denominators (as a polynomial RatFunc)."""
    d = RatFunc.from_polys(x.den)
    g = RatFunc.from_polys(acc.num.gcd(x.den))
    return acc * d / g


def bareiss_echelon(rows):
    """Fraction-free row echelon form; returns (matrix, pivot columns)."""
    M = [_clear_row(r) for r in rows]
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    prev = ONE
    r = 0
    pivots = []
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        for i in range(r + 1, nrows):
            a = M[i][c]
            for j in range(c + 1, ncols):
                v = (piv * M[i][j] - a * M[r][j]) / prev
                if v and not v.is_laurent():
                    raise EliminationError("non-polynomial intermediate entry")
                M[i][j] = v
            M[i][c] = ZERO
        prev = piv
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return M, pivots


def nullspace_vector(rows, free_col):
    """Solve rows . x = 0 with x[free_col] = 1, requiring a one-dimensional kernel."""
    M, pivots = bareiss_echelon(rows)
    ncols = len(rows[0])
    if len(pivots) != ncols - 1 or free_col in pivots:
        raise EliminationError(f"kernel is not spanned by column {free_col} "
                               f"(rank {len(pivots)}, {ncols} columns)")
    x = [ZERO] * ncols
    x[free_col] = ONE
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        s = ZERO
        for j in range(c + 1, ncols):
            if M[k][j] and x[j]:
                s = s + M[k][j] * x[j]
        x[c] = -s / M[k][c]
    return x
