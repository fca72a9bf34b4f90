"""Exact rational linear algebra on lists of ``Fraction``.

Matrices are lists of rows. Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DimensionError

Vector = tuple  # tuple[Fraction, ...]
Matrix = list  # list[list[Fraction]]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a Fraction, int or 'p/q' string")
    return Fraction(x)


def vec(values: Iterable) -> tuple:
    return tuple(as_fraction(v) for v in values)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or a decimal string into a Fraction."""
    return Fraction(text.strip())


def format_rational(x) -> str:
    x = as_fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_vector(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_rational(part) for part in text.split(","))


def dot(x: Sequence, y: Sequence) -> Fraction:
    if len(x) != len(y):
        raise DimensionError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def add(x: Sequence, y: Sequence) -> tuple:
    if len(x) != len(y):
        raise DimensionError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def scale(c, x: Sequence) -> tuple:
    c = as_fraction(c)
    return tuple(c * a for a in x)


def zeros(n: int, m: int | None = None) -> Matrix:
    if m is None:
        m = n
    return [[Fraction(0)] * m for _ in range(n)]


def identity(n: int) -> Matrix:
    out = zeros(n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise DimensionError("inner dimensions do not agree")
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: Matrix, x: Sequence) -> tuple:
    return tuple(dot(row, x) for row in a)


def submatrix(a: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return [[a[i][j] for j in cols] for i in rows]


def is_skew(a: Matrix) -> bool:
    n = len(a)
    return all(len(row) == n for row in a) and all(
        a[i][j] == -a[j][i] for i in range(n) for j in range(i, n)
    )


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def determinant(a: Matrix) -> Fraction:
    """Determinant by Bareiss fraction-free elimination.

    Rows are first cleared of denominators so the elimination runs on
    integers; every division inside the loop is exact.
    """
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    denom = 1
    m = []
    for row in a:
        row = [as_fraction(x) for x in row]
        l = lcm(*(x.denominator for x in row))
        denom *= l
        m.append([int(x * l) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return Fraction(sign * m[n - 1][n - 1], denom)


def symmetric_pivots(a: Matrix) -> list[Fraction] | None:
    """Pivots of the LDL^T factorisation without pivoting.

    Returns ``None`` when a zero pivot appears before the last row, in which
    case the matrix is not definite.
    """
    n = len(a)
    m = [[as_fraction(x) for x in row] for row in a]
    pivots = []
    for k in range(n):
        p = m[k][k]
        pivots.append(p)
        if p == 0:
            return None if k < n - 1 else pivots
        for i in range(k + 1, n):
            f = m[i][k] / p
            if f:
                for j in range(k + 1, n):
                    m[i][j] -= f * m[k][j]
    return pivots


def is_negative_definite(a: Matrix) -> bool:
    if any(a[i][j] != a[j][i] for i in range(len(a)) for j in range(i)):
        return False
    pivots = symmetric_pivots(a)
    return pivots is not None and all(p < 0 for p in pivots)


def row_reduce(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[as_fraction(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Matrix) -> int:
    if not a:
        return 0
    return len(row_reduce(a)[1])


def solve(a: Matrix, b: Sequence) -> tuple | None:
    """A solution of ``a x = b`` (free variables set to zero), or None if inconsistent."""
    if len(a) != len(b):
        raise DimensionError("row count of the system and right-hand side differ")
    if not a:
        return ()
    ncols = len(a[0])
    aug = [list(row) + [as_fraction(rhs)] for row, rhs in zip(a, b)]
    red, pivots = row_reduce(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(red, pivots):
        x[c] = row[ncols]
    return tuple(x)


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + e for row, e in zip(a, identity(n))]
    red, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]
