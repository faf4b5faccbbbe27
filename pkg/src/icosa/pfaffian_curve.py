"""Skew-form nets on ``f^perp`` and their Pfaffian plane curves.

Also hosts the Chern-number bookkeeping on the Mukai-Umemura threefold that
fixes the number of isotropic subspaces orthogonal to a generic cubic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import mpmath

from .exact_core.linalg import _inverse_scalar, kernel_basis
from .exact_core.pfaffian import SkewMatrix, pfaffian
from .exact_core.poly import MultiPoly
from .exact_core.scalars import is_exact, simplify, to_mpc
from .so3_rep import (
    BASIS_E,
    VARS,
    HarmonicForm,
    bombieri_pairing,
    lie_action,
    rational_harmonic_basis,
)


class DegenerateCurveError(ValueError):
    """The Pfaffian of the net vanishes identically."""


@dataclass(frozen=True)
class SkewFormNet:
    d: int
    w_basis: tuple[MultiPoly, ...]
    omegas: tuple[SkewMatrix, SkewMatrix, SkewMatrix]
    exact: bool


@dataclass(frozen=True)
class PfaffianCurve:
    poly: MultiPoly


def _numeric(f: HarmonicForm) -> bool:
    return any(not is_exact(c) for c in f.poly.terms.values())


def skew_net(f: HarmonicForm) -> SkewFormNet:
    """Basis of ``W = f^perp`` inside the harmonics and the matrices of ``omega_{e_k}|_W``."""
    if f.is_zero():
        raise ValueError("skew_net needs f != 0")
    if f.d > 5:
        raise ValueError("skew_net supports d <= 5")
    basis = rational_harmonic_basis(f.d)
    row = [bombieri_pairing(f, b) for b in basis]
    exact = not _numeric(f)
    if exact:
        coords = kernel_basis([row])
    else:
        # Pivot on the largest entry of the single constraint row.
        j = max(range(len(row)), key=lambda k: abs(row[k]))
        coords = []
        for k in range(len(row)):
            if k == j:
                continue
            v = [0] * len(row)
            v[k] = 1
            v[j] = -row[k] / row[j]
            coords.append(v)
    w = []
    for v in coords:
        p = MultiPoly(VARS)
        for c, b in zip(v, basis):
            if c != 0:
                p = p + c * b
        w.append(p)
    omegas = []
    for e in BASIS_E:
        acted = [lie_action(e, wi) for wi in w]
        upper = {}
        for i in range(len(w)):
            for j in range(i + 1, len(w)):
                val = bombieri_pairing(acted[i], w[j])
                if exact:
                    val = simplify(val)
                upper[(i, j)] = val
        omegas.append(SkewMatrix(len(w), upper))
    return SkewFormNet(f.d, tuple(w), tuple(omegas), exact)


def pfaffian_curve(net: SkewFormNet) -> PfaffianCurve:
    """``Pf(x1 omega_1 + x2 omega_2 + x3 omega_3)``, a form of degree ``d``."""
    xs = [MultiPoly.var(v, VARS) for v in VARS]
    n = len(net.w_basis)
    upper = {}
    for i in range(n):
        for j in range(i + 1, n):
            entry = MultiPoly(VARS)
            for x, om in zip(xs, net.omegas):
                c = om[i, j]
                if c != 0:
                    entry = entry + c * x
            upper[(i, j)] = entry
    pf = pfaffian(SkewMatrix(n, upper))
    if not isinstance(pf, MultiPoly):
        pf = MultiPoly.constant(pf, VARS)
    return PfaffianCurve(pf)


@dataclass(frozen=True)
class ProportionalityReport:
    ratio: object  # lambda with Pf = lambda * f
    deviation: object  # exact: max |Pf_a - lambda f_a|; numeric: relative deviation
    exact: bool
    pfaffian: MultiPoly

    @property
    def proportional(self) -> bool:
        if self.exact:
            return self.deviation == 0
        return self.deviation < 1e-9


def proportionality_check(f: HarmonicForm) -> ProportionalityReport:
    """Compare the Pfaffian curve of ``f^perp`` with ``f`` itself.

    ``lambda(c f) = lambda(f) / c`` on both paths: the kernel basis of the
    constraint row does not depend on the scale of ``f``, so neither does the
    Pfaffian. The value of ``lambda`` depends on the chosen basis of ``W``
    (through its volume), so the exact and numeric paths may disagree on it.
    """
    if f.d > 4:
        raise ValueError("proportionality_check supports d <= 4")
    net = skew_net(f)
    pf = pfaffian_curve(net).poly
    if pf.is_zero():
        raise DegenerateCurveError("Pfaffian vanishes identically")
    if net.exact:
        e, c = next(iter(f.poly.terms.items()))
        lam = simplify(pf.coefficient(e) * _inverse_scalar(c))
        diff = pf - lam * f.poly
        dev = 0 if diff.is_zero() else max(abs(complex(to_mpc(v))) for v in diff.terms.values())
        return ProportionalityReport(lam, dev, True, pf)
    # some Pfaffian terms can come out exact; compare everything in one context
    ctx = next(getattr(c, "context", mpmath.mp) for c in f.poly.terms.values() if not is_exact(c))
    pf = pf.map_coefficients(lambda c: to_mpc(c, ctx))
    f = numeric_form(f, ctx)
    e = max(f.poly.terms, key=lambda k: abs(f.poly.terms[k]))
    lam = pf.coefficient(e) / f.poly.terms[e]
    scale = max(abs(v) for v in pf.terms.values())
    keys = set(pf.terms) | set(f.poly.terms)
    dev = max(abs(pf.coefficient(k) - lam * f.poly.coefficient(k)) for k in keys) / scale
    return ProportionalityReport(lam, float(dev), False, pf)


# -- Chern numbers on the Mukai-Umemura threefold ---------------------------------


class GradedClass:
    """Element of ``Q[x, y]/(x^2 - 22y, y^2, x^2 y)``, graded by ``deg x = 1, deg y = 2``.

    Components on the basis ``1, x, y, xy``; ``xy`` is the top class and
    integrates to 1.
    """

    __slots__ = ("c",)
    BASIS = ("1", "x", "y", "xy")
    X_SQUARED = 22

    def __init__(self, one=0, x=0, y=0, xy=0):
        self.c = tuple(Fraction(v) for v in (one, x, y, xy))

    def __add__(self, other: GradedClass) -> GradedClass:
        return GradedClass(*(a + b for a, b in zip(self.c, other.c)))

    def __sub__(self, other: GradedClass) -> GradedClass:
        return GradedClass(*(a - b for a, b in zip(self.c, other.c)))

    def __rmul__(self, k) -> GradedClass:
        return GradedClass(*(Fraction(k) * a for a in self.c))

    def __mul__(self, other):
        if not isinstance(other, GradedClass):
            return other * self
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = other.c
        return GradedClass(
            a0 * b0,
            a0 * b1 + a1 * b0,
            a0 * b2 + a2 * b0 + self.X_SQUARED * a1 * b1,
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        )

    def __pow__(self, n: int) -> GradedClass:
        out = GradedClass(1)
        for _ in range(n):
            out = out * self
        return out

    def integrate(self) -> Fraction:
        return self.c[3]

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedClass) and self.c == other.c

    def __repr__(self) -> str:
        return "GradedClass(" + ", ".join(f"{n}={v}" for n, v in zip(self.BASIS, self.c)) + ")"


@dataclass(frozen=True)
class MUConstants:
    c1: GradedClass
    c2: GradedClass
    c3: GradedClass
    c1_cubed: Fraction
    c1c2: Fraction
    c3_number: Fraction
    c1_dual: GradedClass
    c2_dual: GradedClass
    c3_dual: Fraction
    k_roots: tuple[int, ...]
    k_selected: int

    @property
    def passed(self) -> bool:
        return self.c3_dual == 2 and self.k_roots == (-1, 11) and self.k_selected == -1 and self.c1c2 == 24


def _integer_quadratic_roots(a: int, b: int, c: int) -> tuple[int, ...]:
    disc = b * b - 4 * a * c
    if disc < 0:
        return ()
    s = isqrt(disc)
    if s * s != disc:
        raise ValueError("irrational roots")
    roots = {Fraction(-b - s, 2 * a), Fraction(-b + s, 2 * a)}
    return tuple(sorted(int(r) if r.denominator == 1 else r for r in roots))


def mu_cohomology_constants() -> MUConstants:
    """Chern classes of the universal bundle and the degree ``k`` on the boundary divisor.

    With ``c1 = x``, ``c2 = 24y``, ``c3 = 4xy`` and ``x^2 = 22y``:
    ``c3(E*) = (c3 + 4 c1^3 - 3 c1 c2)/10`` and ``22 = 2k(k - 10)``.
    """
    x = GradedClass(x=1)
    y = GradedClass(y=1)
    c1, c2, c3 = x, 24 * y, 4 * (x * y)
    c1_dual = c1
    c2_dual = c1 * c1 - Fraction(1, 2) * c2
    c3_dual_class = Fraction(1, 10) * (c3 + 4 * (c1 ** 3) - 3 * (c1 * c2))
    # 2k^2 - 20k - 22 = 0; the geometric branch is the negative root.
    k_roots = _integer_quadratic_roots(2, -20, -22)
    return MUConstants(
        c1=c1,
        c2=c2,
        c3=c3,
        c1_cubed=(c1 ** 3).integrate(),
        c1c2=(c1 * c2).integrate(),
        c3_number=c3.integrate(),
        c1_dual=c1_dual,
        c2_dual=c2_dual,
        c3_dual=c3_dual_class.integrate(),
        k_roots=k_roots,
        k_selected=min(k_roots),
    )


def numeric_form(f: HarmonicForm, ctx=mpmath.mp) -> HarmonicForm:
    return HarmonicForm(f.poly.map_coefficients(lambda c: to_mpc(c, ctx)), f.d)
