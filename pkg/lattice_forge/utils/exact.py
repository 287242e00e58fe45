"""Exact integer and rational linear algebra shared by the homology and realization code."""
from typing import Sequence

import numpy as np
from sympy import Matrix, Rational


def integer_matrix(rows: Sequence[Sequence[int]], n_cols: int = 0) -> Matrix:
    """Build a sympy Matrix from nested integers, keeping the column count for empty inputs."""
    rows = [list(row) for row in rows]
    if not rows:
        return Matrix.zeros(0, n_cols)
    return Matrix(rows)


def to_float_array(matrix: Matrix) -> np.ndarray:
    if matrix.rows == 0 or matrix.cols == 0:
        return np.zeros((matrix.rows, matrix.cols))
    return np.array([[float(x) for x in row] for row in matrix.tolist()], dtype=float)


def is_integral(matrix: Matrix) -> bool:
    return all(Rational(x).q == 1 for x in matrix)


def to_int_rows(matrix: Matrix) -> list[list[int]]:
    return [[int(x) for x in row] for row in matrix.tolist()]


def row_echelon_transform(
    matrix: Sequence[Sequence[int]],
) -> tuple[list[list[int]], list[list[int]], int]:
    """Integer row echelon form with the unimodular transform that produces it.

    Args:
        matrix (Sequence[Sequence[int]]): integer matrix M with at least one row.

    Returns:
        tuple: (H, P, rank) with P·M = H, P unimodular, H in row echelon form with
            positive pivots and its zero rows at the bottom.
    """
    h = [[int(x) for x in row] for row in matrix]
    n_rows = len(h)
    n_cols = len(h[0]) if n_rows else 0
    p = [[int(i == j) for j in range(n_rows)] for i in range(n_rows)]

    def subtract(target: int, source: int, factor: int) -> None:
        h[target] = [a - factor * b for a, b in zip(h[target], h[source])]
        p[target] = [a - factor * b for a, b in zip(p[target], p[source])]

    pivot_row = 0
    for col in range(n_cols):
        if pivot_row == n_rows:
            break
        found_pivot = False
        while True:
            candidates = [r for r in range(pivot_row, n_rows) if h[r][col] != 0]
            if not candidates:
                break
            found_pivot = True
            best = min(candidates, key=lambda r: (abs(h[r][col]), r))
            h[pivot_row], h[best] = h[best], h[pivot_row]
            p[pivot_row], p[best] = p[best], p[pivot_row]
            cleared = True
            for r in range(pivot_row + 1, n_rows):
                if h[r][col] != 0:
                    subtract(r, pivot_row, h[r][col] // h[pivot_row][col])
                    if h[r][col] != 0:
                        cleared = False
            if cleared:
                break
        if not found_pivot:
            continue
        if h[pivot_row][col] < 0:
            h[pivot_row] = [-x for x in h[pivot_row]]
            p[pivot_row] = [-x for x in p[pivot_row]]
        pivot_row += 1
    return h, p, pivot_row


def schur_complement(a: Matrix, d: int) -> Matrix:
    """A11 - A12 A22^-1 A21 for the leading d x d block."""
    b = a.rows
    if d == b:
        return Matrix(a)
    a11 = a[:d, :d]
    a12 = a[:d, d:]
    a21 = a[d:, :d]
    a22 = a[d:, d:]
    return a11 - a12 * a22.inv() * a21
