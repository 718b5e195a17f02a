"""Exact row reduction over the rationals.

An augmented system is a list of rows ``[a_0, ..., a_{n-1}, b]`` read as
``sum(a_j x_j) + b = 0``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Matrix = list[list[Fraction]]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def rref(matrix: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the ascending list of pivot columns."""
    m = as_matrix(matrix)
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((k for k in range(r, n_rows) if m[k][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        lead = m[r][c]
        if lead != 1:
            m[r] = [v / lead for v in m[r]]
        for k in range(n_rows):
            factor = m[k][c]
            if k != r and factor != 0:
                row_r = m[r]
                m[k] = [a - factor * b for a, b in zip(m[k], row_r)]
        pivots.append(c)
        r += 1
    return m, pivots


def solve_affine(matrix: Sequence[Sequence]) -> Optional[list[Fraction]]:
    """Particular solution of an augmented system, or None if it is inconsistent.

    Free variables are set to zero.
    """
    if not matrix:
        return []
    n = len(matrix[0]) - 1
    reduced, pivots = rref(matrix)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, p in enumerate(pivots):
        x[p] = -reduced[row][n]
    return x


def residual(matrix: Sequence[Sequence], x: Sequence) -> list[Fraction]:
    """Row-wise value of ``A x + b``; all zero for a solution."""
    return [sum((Fraction(a) * v for a, v in zip(row[:-1], x)), Fraction(0)) + row[-1] for row in matrix]
