"""Exact dense linear algebra over any field of exact scalars.

Matrices are lists of rows. Pivoting takes the first nonzero entry, which is
correct for exact fields; nothing here is meant for floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import MultiPoly

Matrix = list[list]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence]) -> Matrix:
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    out = []
    for row in a:
        new = []
        for col in bt:
            s = 0
            for x, y in zip(row, col):
                if x and y:
                    s = s + x * y
            new.append(s)
        out.append(new)
    return out


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    out = []
    for row in a:
        s = 0
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return out


def _inverse_scalar(x):
    if isinstance(x, int):
        return Fraction(1, x)
    if hasattr(x, "inverse"):
        return x.inverse()
    return 1 / x


def rref(m: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    a = [list(r) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = _inverse_scalar(a[r][c])
        a[r] = [x * inv if x != 0 else 0 for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y if y != 0 else x for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def kernel_basis(m: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    """Exact basis of the right kernel ``{v : M v = 0}``.

    Returns an empty list iff the matrix has full column rank. ``ncols`` is
    needed only when ``m`` has no rows.
    """
    if not m:
        if ncols is None:
            raise ValueError("empty matrix needs an explicit column count")
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    cols = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for row, p in zip(red, pivots):
            if row[f] != 0:
                v[p] = -row[f]
        basis.append(v)
    return basis


def det(m: Sequence[Sequence]):
    """Determinant by Gaussian elimination over a field."""
    a = [list(r) for r in m]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    result = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = -result
        pv = a[c][c]
        result = result * pv
        inv = _inverse_scalar(pv)
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] * inv
                a[i] = [x - f * y if y != 0 else x for x, y in zip(a[i], a[c])]
    return result


def det_expand(m: Sequence[Sequence]):
    """Determinant by cofactor expansion; works over polynomial rings too."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * det_expand(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def solve(a: Sequence[Sequence], b: Sequence) -> list:
    """Unique solution of ``A x = b`` for square invertible ``A``."""
    n = len(a)
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [red[i][n] for i in range(n)]


def inverse(a: Sequence[Sequence]) -> Matrix:
    n = len(a)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in red[:n]]


def poly_matrix_det(m: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    return det_expand(m)
