"""Exact dense linear algebra over the rationals.

A matrix is a list of rows, each row a list of Fraction (or int) entries.
Every routine is pure: inputs are never mutated, results are fresh lists,
and all arithmetic is exact.
"""

import math
from fractions import Fraction


def dot(row, v):
    return sum((Fraction(a) * b for a, b in zip(row, v)), Fraction(0))


def mat_vec(m, v):
    return [dot(row, v) for row in m]


def identity(n):
    return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]


def rref(m):
    """Reduced row echelon form of m.

    Returns (reduced, rank, pivot_columns).  Pivot columns are strictly
    increasing, pivot entries are 1 with zeros above and below, so the
    output is the unique RREF of the row space.  Degenerate shapes
    (no rows, no columns) are fine.
    """
    reduced = [[Fraction(x) for x in row] for row in m]
    nrows = len(reduced)
    ncols = len(reduced[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = None
        for i in range(r, nrows):
            if reduced[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        reduced[r], reduced[pivot_row] = reduced[pivot_row], reduced[r]
        lead = reduced[r][c]
        if lead != 1:
            reduced[r] = [x / lead for x in reduced[r]]
        row_r = reduced[r]
        for i in range(nrows):
            f = reduced[i][c]
            if i != r and f:
                reduced[i] = [a - f * b for a, b in zip(reduced[i], row_r)]
        pivots.append(c)
        r += 1
    return reduced, len(pivots), pivots


def nullspace_basis(m, ncols=None):
    """Canonical kernel basis read off the reduced row echelon form.

    One vector per free column f, in ascending column order: entry 1 at f,
    0 at every other free column, and the back-substituted pivot values
    elsewhere.  Each vector is checked against the original system and the
    count is checked against rank-nullity before returning.
    """
    if ncols is None:
        if not m:
            raise ValueError("ncols is required for a matrix with no rows")
        ncols = len(m[0])
    reduced, rank, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for t, p in enumerate(pivots):
            v[p] = -reduced[t][f]
        basis.append(v)
    assert len(basis) == ncols - rank
    for v in basis:
        assert all(x == 0 for x in mat_vec(m, v))
    return basis


def rank_fraction_free(m):
    """Rank via Bareiss fraction-free elimination.

    Rows are scaled to integers, then eliminated in the two-step Bareiss
    scheme where every division by the previous pivot is exact.  This is an
    independent code path from rref and exists as a cross-check oracle.
    """
    if not m or not m[0]:
        return 0
    a = []
    for row in m:
        fr = [Fraction(x) for x in row]
        scale = math.lcm(*(x.denominator for x in fr))
        a.append([int(x * scale) for x in fr])
    nrows, ncols = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = None
        for i in range(r, nrows):
            if a[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                num = a[r][c] * a[i][j] - a[i][c] * a[r][j]
                q, rem = divmod(num, prev)
                assert rem == 0
                a[i][j] = q
            a[i][c] = 0
        prev = a[r][c]
        r += 1
    return r
