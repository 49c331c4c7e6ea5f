"""Exact dense linear algebra over Fraction / QuadExt scalars.

Plain Gaussian elimination; matrices are lists of row lists.  Nothing here
is tuned beyond zero-skipping, which is all desk-scale dimensions need.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def _rref(rows: list[list], ncols: int) -> list[int]:
    """Reduce ``rows`` in place; return the pivot column list."""
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        if inv != 1:
            rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(matrix: Sequence[Sequence]) -> int:
    rows = [list(row) for row in matrix]
    if not rows:
        return 0
    return len(_rref(rows, len(rows[0])))


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[list]:
    """One solution x of A x = rhs, free variables set to 0; None if inconsistent."""
    m = len(matrix)
    if m == 0:
        return []
    n = len(matrix[0])
    rows = [list(row) + [b] for row, b in zip(matrix, rhs)]
    pivots = _rref(rows, n)
    for i in range(len(pivots), m):
        if rows[i][n]:
            return None
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x[c] = rows[r][n]
    return x


def nullspace(matrix: Sequence[Sequence]) -> list[list]:
    """Basis of {x : A x = 0}, one vector per free column, in column order."""
    m = len(matrix)
    if m == 0:
        return []
    n = len(matrix[0])
    rows = [list(row) for row in matrix]
    pivots = _rref(rows, n)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -rows[r][free]
        basis.append(v)
    return basis


def det_int(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix (fraction-free Bareiss)."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = None
            for i in range(k + 1, n):
                if a[i][k]:
                    swap = i
                    break
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]
