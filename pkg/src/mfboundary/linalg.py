"""Exact integer/rational linear algebra: rank, determinant, Smith form.

Everything works over arbitrary-precision integers or ``Fraction``; no
floating point.  Matrices are lists of lists (rows).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rational_rank(rows: Sequence[Sequence[int | Fraction]]) -> int:
    """Rank over the rationals by fraction-exact Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        for r in range(row + 1, nrows):
            if m[r][col]:
                f = m[r][col] * inv
                for cc in range(col, ncols):
                    m[r][cc] -= f * m[row][cc]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def integer_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_normal_form(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Diagonal of the Smith normal form, non-negative, with d1 | d2 | ...

    Returns ``min(nrows, ncols)`` entries (zeros included).
    """
    m = [list(map(int, r)) for r in rows]
    if not m or not m[0]:
        return ()
    nrows, ncols = len(m), len(m[0])
    size = min(nrows, ncols)
    diag: list[int] = []
    top = 0
    while top < size:
        # locate a pivot of minimal absolute value
        best = None
        for i in range(top, nrows):
            for j in range(top, ncols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[top], m[bi] = m[bi], m[top]
        for r in m:
            r[top], r[bj] = r[bj], r[top]
        # clear the pivot row and column; restart when a smaller entry appears
        while True:
            piv = m[top][top]
            dirty = False
            for i in range(top + 1, nrows):
                if m[i][top]:
                    q = m[i][top] // piv
                    for j in range(top, ncols):
                        m[i][j] -= q * m[top][j]
                    if m[i][top]:
                        m[top], m[i] = m[i], m[top]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(top + 1, ncols):
                if m[top][j]:
                    q = m[top][j] // piv
                    for i in range(top, nrows):
                        m[i][j] -= q * m[i][top]
                    if m[top][j]:
                        for r in m:
                            r[top], r[j] = r[j], r[top]
                        dirty = True
                        break
            if not dirty:
                break
        # enforce divisibility: pivot must divide every remaining entry
        piv = m[top][top]
        offender = None
        for i in range(top + 1, nrows):
            for j in range(top + 1, ncols):
                if m[i][j] % piv != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(top, ncols):
                m[top][j] += m[offender][j]
            continue
        diag.append(abs(piv))
        top += 1
    diag += [0] * (size - len(diag))
    return tuple(diag)


def torsion_coefficients(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """SNF entries > 1: the torsion coefficients of the cokernel."""
    return tuple(d for d in smith_normal_form(rows) if d > 1)
