"""Exact linear algebra over Q.

Matrices are lists of rows.  Elimination is fraction-free (Bareiss) on
integer rows obtained by clearing denominators row by row; kernels are read
off the resulting echelon form by exact back substitution.
"""

from fractions import Fraction
from math import lcm
from typing import List, Sequence, Tuple

Matrix = List[List[Fraction]]


def _integer_row(row) -> List[int]:
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    return [int(Fraction(x) * den) for x in row]


def echelon(rows: Sequence[Sequence], ncols: int = None) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free row echelon form; returns (integer rows, pivot columns)."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    a = [_integer_row(r) for r in rows if any(r)]
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == len(a):
            break
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, len(a)):
            f = a[i][c]
            row_i = a[i]
            row_r = a[r]
            # Bareiss step: exact division by the previous pivot
            a[i] = [(piv * row_i[j] - f * row_r[j]) // prev for j in range(ncols)]
        prev = piv
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int = None) -> int:
    return len(echelon(rows, ncols)[1])


def rref(rows: Sequence[Sequence], ncols: int = None) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form with Fraction entries."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    ech, pivots = echelon(rows, ncols)
    red = [[Fraction(x) for x in row] for row in ech]
    for i in reversed(range(len(red))):
        c = pivots[i]
        inv = 1 / red[i][c]
        red[i] = [x * inv for x in red[i]]
        for k in range(i):
            f = red[k][c]
            if f:
                red[k] = [x - f * y for x, y in zip(red[k], red[i])]
    return red, pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """Basis of {v : A v = 0}; one vector per free column, free entry = 1."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        basis.append(v)
    return basis


def det(m: Sequence[Sequence]) -> Fraction:
    """Bareiss determinant of a square rational matrix."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a = []
    for row in m:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        scale /= den
        a.append([int(Fraction(x) * den) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return Fraction(0)
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] * scale


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [list(map(Fraction, row)) + identity(n)[i] for i, row in enumerate(m)]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red[:n]]


def span_equal(a: Sequence[Sequence], b: Sequence[Sequence], ncols: int) -> bool:
    ra, rb = rank(a, ncols), rank(b, ncols)
    return ra == rb == rank(list(a) + list(b), ncols)
