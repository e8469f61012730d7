"""
Exact linear algebra over the rationals.

Rank and echelon computations use fraction-free (Bareiss) elimination on
integer rows, so intermediate entries stay integral and the only division
performed is exact. Pivot columns are scanned left to right, which makes the
echelon basis depend only on the column order chosen by the caller.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import DomainError

Row = Sequence[Fraction]


def _integer_row(row: Row) -> list[int]:
    den = 1
    for x in row:
        den = lcm(den, Fraction(x).denominator)
    return [int(Fraction(x) * den) for x in row]


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
    if g > 1:
        row = [x // g for x in row]
    for x in row:
        if x:
            if x < 0:
                row = [-y for y in row]
            break
    return row


def echelon(rows: Sequence[Row]) -> tuple[list[list[int]], list[int]]:
    """
    Row-reduce ``rows`` with Bareiss elimination.

    Returns the nonzero echelon rows (made primitive: integer entries with
    gcd 1 and a positive leading entry) and their pivot columns.
    """
    m = [_integer_row(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    if any(len(r) != ncols for r in m):
        raise DomainError("rows of unequal length")
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            row_i = m[i]
            row_r = m[r]
            # Sylvester's identity guarantees exact division by the previous pivot
            m[i] = [(piv * row_i[k] - f * row_r[k]) // prev for k in range(ncols)]
        prev = piv
        pivots.append(c)
        r += 1
    return [_primitive(row) for row in m[:r]], pivots


def rank(rows: Sequence[Row]) -> int:
    return len(echelon(rows)[1])


def solve(a: Sequence[Row], b: Row) -> list[Fraction] | None:
    """
    Solve ``a x = b`` exactly for square or tall ``a`` of full column rank.

    Returns None when the system is inconsistent. Raises DomainError when the
    columns of ``a`` are dependent (the solution would not be unique).
    """
    n = len(a[0]) if a else 0
    aug = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    row = 0
    for col in range(n):
        p = next((i for i in range(row, len(aug)) if aug[i][col] != 0), None)
        if p is None:
            raise DomainError("coefficient matrix is rank deficient")
        aug[row], aug[p] = aug[p], aug[row]
        piv = aug[row][col]
        aug[row] = [x / piv for x in aug[row]]
        for i in range(len(aug)):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[row])]
        row += 1
    if any(aug[i][n] != 0 for i in range(row, len(aug))):
        return None
    return [aug[i][n] for i in range(n)]


def express(vectors: Sequence[Row], target: Row) -> list[Fraction] | None:
    """
    Coordinates of ``target`` in terms of linearly independent ``vectors``.

    Returns None if ``target`` is outside their span.
    """
    if not vectors:
        return [] if all(Fraction(x) == 0 for x in target) else None
    cols = [list(col) for col in zip(*vectors)]
    return solve(cols, target)
