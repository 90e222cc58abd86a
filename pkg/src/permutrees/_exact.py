"""Exact rank and solve over the rationals, for the small matrices used in checks."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _echelon(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    matrix = [[Fraction(x) for x in row] for row in rows]
    if not matrix:
        return []
    width = len(matrix[0])
    pivot_row = 0
    for col in range(width):
        pick = next((r for r in range(pivot_row, len(matrix)) if matrix[r][col] != 0), None)
        if pick is None:
            continue
        matrix[pivot_row], matrix[pick] = matrix[pick], matrix[pivot_row]
        lead = matrix[pivot_row][col]
        matrix[pivot_row] = [x / lead for x in matrix[pivot_row]]
        for r in range(len(matrix)):
            if r != pivot_row and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [x - factor * y for x, y in zip(matrix[r], matrix[pivot_row])]
        pivot_row += 1
        if pivot_row == len(matrix):
            break
    return matrix[:pivot_row]


def rank(rows: Sequence[Sequence]) -> int:
    return len(_echelon(rows))


def affine_dimension(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of a nonempty point set."""
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    return rank(diffs) if diffs else 0


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """Unique solution of a square system, or ``None`` when singular."""
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced = _echelon(augmented)
    n = len(matrix[0])
    if len(reduced) < n:
        return None
    sol = [reduced[k][-1] for k in range(n)]
    for row, b in zip(matrix, rhs):
        if sum(Fraction(a) * x for a, x in zip(row, sol)) != b:
            return None  # inconsistent: the pivot fell in the right-hand column
    return sol
