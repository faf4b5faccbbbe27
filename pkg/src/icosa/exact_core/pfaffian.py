"""Skew-symmetric matrices and their Pfaffians."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence


class SkewMatrix:
    """Even-dimensional skew matrix; only the strict upper triangle is stored.

    Entries may be scalars or :class:`~icosa.exact_core.poly.MultiPoly`.
    """

    __slots__ = ("n", "_upper")

    def __init__(self, n: int, upper: dict[tuple[int, int], object] | None = None):
        self.n = n
        self._upper = {}
        for (i, j), v in (upper or {}).items():
            if not 0 <= i < j < n:
                raise ValueError(f"({i}, {j}) is not a strict upper-triangle index for n={n}")
            self._upper[(i, j)] = v

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> SkewMatrix:
        n = len(rows)
        for i in range(n):
            if len(rows[i]) != n:
                raise ValueError("matrix is not square")
            if rows[i][i] != 0:
                raise ValueError("diagonal of a skew matrix must vanish")
            for j in range(i + 1, n):
                if rows[i][j] + rows[j][i] != 0:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not opposite")
        return cls(n, {(i, j): rows[i][j] for i in range(n) for j in range(i + 1, n)})

    def __getitem__(self, key: tuple[int, int]):
        i, j = key
        if i == j:
            return 0
        if i < j:
            return self._upper.get((i, j), 0)
        return -self._upper.get((j, i), 0)

    def rows(self) -> list[list]:
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def transpose_sum_is_zero(self) -> bool:
        return all(self[i, j] + self[j, i] == 0 for i in range(self.n) for j in range(self.n))


def pfaffian(m: SkewMatrix | Sequence[Sequence]):
    """Pfaffian by recursive expansion along the first row.

    ``Pf(M) = sum_j (-1)^(j+1) m[0][j] Pf(M without rows/cols 0 and j)``
    with zero-based ``j``. Sub-Pfaffians are memoised on the index set, giving
    15 terms at 6x6 and 105 at 8x8.
    """
    if not isinstance(m, SkewMatrix):
        m = SkewMatrix.from_rows(m)
    if m.n % 2:
        raise ValueError("Pfaffian of an odd-dimensional matrix")
    if m.n > 12:
        raise ValueError("Pfaffian expansion is limited to dimension 12")

    @lru_cache(maxsize=None)
    def pf(idx: tuple[int, ...]):
        if not idx:
            return 1
        first, rest = idx[0], idx[1:]
        total = 0
        for k, j in enumerate(rest):
            a = m[first, j]
            if a == 0:
                continue
            sub = pf(rest[:k] + rest[k + 1:])
            if sub == 0:
                continue
            term = a * sub
            total = total + term if k % 2 == 0 else total - term
        return total

    return pf(tuple(range(m.n)))
