"""Univariate polynomials over exact fields, as coefficient lists (highest degree first)."""

from __future__ import annotations

from typing import Sequence

from .linalg import _inverse_scalar
from .scalars import simplify


def trim(p: Sequence) -> list:
    p = list(p)
    while p and p[0] == 0:
        p.pop(0)
    return p


def degree(p: Sequence) -> int:
    return len(trim(p)) - 1


def monic(p: Sequence) -> list:
    p = trim(p)
    if not p:
        return []
    inv = _inverse_scalar(p[0])
    return [simplify(c * inv) for c in p]


def derivative(p: Sequence) -> list:
    p = trim(p)
    n = len(p) - 1
    return trim([(n - k) * c for k, c in enumerate(p[:-1])])


def divmod_poly(a: Sequence, b: Sequence) -> tuple[list, list]:
    a = trim(a)
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = _inverse_scalar(b[0])
    q = []
    r = list(a)
    while len(r) >= len(b):
        c = simplify(r[0] * inv)
        q.append(c)
        for i in range(len(b)):
            r[i] = simplify(r[i] - c * b[i])
        r.pop(0)
    return q or [0], trim(r)


def gcd(a: Sequence, b: Sequence) -> list:
    """Monic gcd by the Euclidean algorithm."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def exact_div(a: Sequence, b: Sequence) -> list:
    q, r = divmod_poly(a, b)
    if r:
        raise ValueError("division is not exact")
    return q


def squarefree_decomposition(p: Sequence) -> list[tuple[list, int]]:
    """Yun's algorithm: ``p = c * prod a_i^i`` with squarefree, coprime ``a_i``.

    Returns ``[(a_i, i)]`` for the nonconstant factors, each monic.
    """
    p = monic(p)
    if degree(p) < 1:
        return []
    out = []
    dp = derivative(p)
    a = gcd(p, dp)
    b = exact_div(p, a)
    c = exact_div(dp, a)
    i = 1
    while degree(b) > 0:
        d = [x - y for x, y in zip(_pad(c, len(b) - 1), _pad(derivative(b), len(b) - 1))]
        d = trim([simplify(x) for x in d])
        g = gcd(b, d) if d else monic(b)
        if degree(g) > 0:
            out.append((g, i))
        b = exact_div(b, g)
        c = exact_div(d, g) if d else []
        i += 1
    return out


def _pad(p: Sequence, n: int) -> list:
    """Left-pad with zeros to ``n`` coefficients (degree ``n - 1``)."""
    p = trim(p)
    return [0] * (n - len(p)) + p
