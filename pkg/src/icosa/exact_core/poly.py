"""Sparse multivariate polynomials over any of the scalar types."""

from __future__ import annotations

from math import factorial
from typing import Callable, Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class MultiPoly:
    """Sparse polynomial: a map from exponent vectors to nonzero coefficients.

    Instances are treated as immutable. Arithmetic requires identical variable
    tuples; use :meth:`extend` to move a polynomial into a larger ring.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, object] | None = None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean: dict[Exponent, object] = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != n:
                    raise ValueError(f"exponent {exp} does not match variables {self.variables}")
                if c != 0:
                    clean[exp] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> MultiPoly:
        return cls(variables)

    @classmethod
    def constant(cls, c, variables: Sequence[str]) -> MultiPoly:
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> MultiPoly:
        variables = tuple(variables)
        exp = tuple(1 if v == name else 0 for v in variables)
        if sum(exp) != 1:
            raise ValueError(f"{name!r} is not one of {variables}")
        return cls(variables, {exp: 1})

    @classmethod
    def linear_form(cls, coeffs: Sequence, variables: Sequence[str]) -> MultiPoly:
        """``sum(c_i * variables[i])``."""
        n = len(variables)
        if len(coeffs) != n:
            raise ValueError("coefficient count does not match variables")
        terms = {}
        for i, c in enumerate(coeffs):
            exp = [0] * n
            exp[i] = 1
            terms[tuple(exp)] = c
        return cls(variables, terms)

    # -- basic protocol -----------------------------------------------------

    def __repr__(self) -> str:
        return f"MultiPoly({self.variables}, {self.terms})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exp) if e
            )
            c = self.terms[exp]
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                return False
            return self.terms == other.terms
        if not self.terms:
            return other == 0
        return self.terms == {(0,) * len(self.variables): other}

    __hash__ = None  # type: ignore[assignment]

    def _check(self, other: MultiPoly) -> None:
        if other.variables != self.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(other, self.variables)

    # -- arithmetic -----------------------------------------------------------

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> MultiPoly:
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return MultiPoly(self.variables, terms)

    __radd__ = __add__

    def __sub__(self, other) -> MultiPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> MultiPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            if other == 0:
                return MultiPoly(self.variables)
            return MultiPoly(self.variables, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        terms: dict[Exponent, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                terms[e] = terms[e] + p if e in terms else p
        return MultiPoly(self.variables, terms)

    def __rmul__(self, other) -> MultiPoly:
        if other == 0:
            return MultiPoly(self.variables)
        return MultiPoly(self.variables, {e: other * c for e, c in self.terms.items()})

    def __truediv__(self, scalar) -> MultiPoly:
        return MultiPoly(self.variables, {e: c / scalar for e, c in self.terms.items()})

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure ------------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def coefficient(self, exp: Exponent):
        return self.terms.get(tuple(exp), 0)

    def map_coefficients(self, fn: Callable) -> MultiPoly:
        return MultiPoly(self.variables, {e: fn(c) for e, c in self.terms.items()})

    def extend(self, variables: Sequence[str]) -> MultiPoly:
        """Re-express in a ring whose variables include ours."""
        variables = tuple(variables)
        idx = [variables.index(v) for v in self.variables]
        terms = {}
        for e, c in self.terms.items():
            new = [0] * len(variables)
            for i, k in zip(idx, e):
                new[i] = k
            terms[tuple(new)] = c
        return MultiPoly(variables, terms)

    # -- calculus and evaluation -----------------------------------------------

    def partial(self, var: str | int) -> MultiPoly:
        i = var if isinstance(var, int) else self.variables.index(var)
        terms = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = e[:i] + (k - 1,) + e[i + 1:]
                terms[ne] = c * k
        return MultiPoly(self.variables, terms)

    def derivative(self, orders: Sequence[int]) -> MultiPoly:
        """Mixed partial derivative, ``orders[i]`` times in variable ``i``."""
        terms = {}
        for e, c in self.terms.items():
            if any(k < o for k, o in zip(e, orders)):
                continue
            mult = 1
            for k, o in zip(e, orders):
                mult *= factorial(k) // factorial(k - o)
            terms[tuple(k - o for k, o in zip(e, orders))] = c * mult
        return MultiPoly(self.variables, terms)

    def evaluate(self, point: Sequence):
        if len(point) != len(self.variables):
            raise ValueError("point arity does not match variables")
        # Cache powers per variable; cheap for the small degrees used here.
        powers: list[dict[int, object]] = [{0: 1} for _ in point]
        total = 0
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    if k not in cache:
                        cache[k] = point[i] ** k
                    term = term * cache[k]
            total = total + term
        return total

    def substitute(self, images: Mapping[str, MultiPoly] | Sequence[MultiPoly]) -> MultiPoly:
        """Compose: replace each variable by a polynomial (all in one common ring)."""
        if isinstance(images, Mapping):
            seq = [images[v] for v in self.variables]
        else:
            seq = list(images)
        if len(seq) != len(self.variables):
            raise ValueError("need one image per variable")
        ring = seq[0].variables
        for s in seq:
            if s.variables != ring:
                raise ValueError("substitution images must share a ring")
        powers: list[dict[int, MultiPoly]] = [{0: MultiPoly.constant(1, ring), 1: s} for s in seq]

        def power(i: int, k: int) -> MultiPoly:
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * seq[i]
            return cache[k]

        result = MultiPoly(ring)
        for e, c in self.terms.items():
            term = MultiPoly.constant(c, ring)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def linear_change(self, matrix: Sequence[Sequence]) -> MultiPoly:
        """``p(M x)`` for a square matrix ``M`` acting on the variable vector."""
        v = self.variables
        images = [
            MultiPoly.linear_form([matrix[i][j] for j in range(len(v))], v) for i in range(len(v))
        ]
        return self.substitute(images)


def poly_arith(p: MultiPoly, q, op: str):
    """Functional front end: ``op`` is add, mul, partial_derivative or evaluate.

    For ``partial_derivative`` ``q`` names the variable; for ``evaluate`` it is
    the point.
    """
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "partial_derivative":
        return p.partial(q)
    if op == "evaluate":
        return p.evaluate(q)
    raise ValueError(f"unknown operation {op!r}")


def monomials(nvars: int, degree: int) -> list[Exponent]:
    """All exponent vectors of the given total degree, graded-lex descending."""
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def dot(u: Iterable, v: Iterable):
    total = 0
    for a, b in zip(u, v):
        total = total + a * b
    return total
