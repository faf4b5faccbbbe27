"""Binary forms and their Sylvester resultant."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linalg import det
from .poly import MultiPoly

BINARY_VARS = ("z1", "z2")


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous form ``sum_k coeffs[k] * z1^(n-k) * z2^k`` of formal degree n.

    The formal degree is ``len(coeffs) - 1`` even when leading coefficients
    vanish; that is what makes roots at infinity visible to the resultant.
    """

    coeffs: tuple

    def __init__(self, coeffs: Sequence):
        object.__setattr__(self, "coeffs", tuple(coeffs))
        if not self.coeffs:
            raise ValueError("a binary form needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_poly(self) -> MultiPoly:
        n = self.degree
        return MultiPoly(BINARY_VARS, {(n - k, k): c for k, c in enumerate(self.coeffs)})

    @classmethod
    def from_poly(cls, p: MultiPoly, degree: int) -> BinaryForm:
        if p.variables != BINARY_VARS:
            raise ValueError(f"expected a polynomial in {BINARY_VARS}")
        if not p.is_homogeneous(degree):
            raise ValueError(f"polynomial is not homogeneous of degree {degree}")
        return cls([p.coefficient((degree - k, k)) for k in range(degree + 1)])

    def d_z1(self) -> BinaryForm:
        n = self.degree
        return BinaryForm([(n - k) * c for k, c in enumerate(self.coeffs[:-1])])

    def d_z2(self) -> BinaryForm:
        return BinaryForm([k * c for k, c in enumerate(self.coeffs) if k > 0])

    def scale(self, s) -> BinaryForm:
        return BinaryForm([s * c for c in self.coeffs])


def sylvester_matrix(p: BinaryForm, q: BinaryForm) -> list[list]:
    m, n = p.degree, q.degree
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(p.coeffs) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(q.coeffs) + [0] * (size - n - 1 - i))
    return rows


def resultant(p: BinaryForm, q: BinaryForm):
    """Exact homogeneous resultant ``det Sylvester(p, q)``.

    Vanishes iff the two forms share a projective root (including [1:0]).
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of a zero form")
    if p.degree == 0 and q.degree == 0:
        return 1
    return det(sylvester_matrix(p, q))
