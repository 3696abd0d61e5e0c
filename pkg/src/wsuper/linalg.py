"""Small exact linear algebra kernel over Fraction matrices.

Matrices are lists of lists of Fraction; all routines are pure and
return fresh objects.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["rref", "solve", "nullspace", "invert"]


def _copy(mat):
    return [[Fraction(x) for x in row] for row in mat]


def rref(mat):
    """Reduced row echelon form.  Returns (matrix, pivot column list)."""
    m = _copy(mat)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def solve(mat, rhs):
    """One exact solution of mat*x = rhs, or None if inconsistent.

    rhs may be a vector or a list of vectors (solved column-wise when a
    list of columns is given as a matrix with matching row count).
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    aug = [[Fraction(x) for x in mat[i]] + [Fraction(rhs[i])] for i in range(rows)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for r, c in enumerate(pivots):
        x[c] = red[r][cols]
    return x


def nullspace(mat):
    """Basis of the kernel of mat, as a list of vectors."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    if rows == 0:
        return [[Fraction(1) if i == j else Fraction(0) for i in range(cols)] for j in range(cols)]
    red, pivots = rref(mat)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def invert(mat):
    """Exact inverse of a square matrix, or None if singular."""
    n = len(mat)
    aug = [
        [Fraction(x) for x in mat[i]]
        + [Fraction(1) if j == i else Fraction(0) for j in range(n)]
        for i in range(n)
    ]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]
