"""The (2d+1)-dimensional representation of SO(3, C).

Two realisations are used: harmonic polynomials of degree ``d`` in
``(x1, x2, x3)`` and binary forms of degree ``2d`` in ``(z1, z2)``; the null
conic parametrisation ``a(z) = (z1^2 - z2^2, i(z1^2 + z2^2), 2 z1 z2)`` carries
one to the other. The invariant pairing is the Bombieri (apolar) product,
normalised so that ``(f, (x.a)^d) = f(a)``.

Conventions pinned by the tests:

* ``u`` in so(3) acts on vectors by ``x -> u x x`` and on functions by
  ``(u.f)(x) = grad f(x) . (x x u)``, the derivative of ``f(exp(-t u) x)``.
* ``h = i e3``, ``n+ = e1 + i e2``, ``n- = e1 - i e2``, so that
  ``(x1 + i x2)^d`` has weight ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Sequence

import mpmath

from .exact_core.linalg import identity, inverse, kernel_basis, matmul, rank, transpose
from .exact_core.poly import MultiPoly, monomials
from .exact_core.resultant import BINARY_VARS, BinaryForm
from .exact_core.scalars import I, PHI, QSqrt5, is_exact, simplify, to_mpc

VARS = ("x1", "x2", "x3")

Vector = tuple  # three scalars; identified with so(3) through the cross product


class NotIsotropicError(ValueError):
    pass


# -- vectors ------------------------------------------------------------------


def ip(u: Sequence, v: Sequence):
    """Complex-bilinear inner product ``(u, v)``."""
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u: Sequence, v: Sequence) -> Vector:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def apply(g: Sequence[Sequence], v: Sequence) -> Vector:
    return tuple(g[i][0] * v[0] + g[i][1] * v[1] + g[i][2] * v[2] for i in range(3))


def linear(a: Sequence) -> MultiPoly:
    """The linear form ``(x, a)``."""
    return MultiPoly.linear_form(list(a), VARS)


def quadric() -> MultiPoly:
    return linear((1, 0, 0)) ** 2 + linear((0, 1, 0)) ** 2 + linear((0, 0, 1)) ** 2


# -- forms --------------------------------------------------------------------


def laplacian(p: MultiPoly) -> MultiPoly:
    return sum((p.partial(v).partial(v) for v in p.variables), MultiPoly(p.variables))


def _is_numeric(p: MultiPoly) -> bool:
    return any(not is_exact(c) for c in p.terms.values())


def _coeff_norm(p: MultiPoly) -> float:
    return max((abs(complex(to_mpc(c))) for c in p.terms.values()), default=0.0)


@dataclass(frozen=True)
class HarmonicForm:
    """Homogeneous harmonic polynomial in ``(x1, x2, x3)``."""

    poly: MultiPoly
    d: int = field(default=-1)

    def __post_init__(self):
        p = self.poly
        if p.variables != VARS:
            raise ValueError(f"harmonic forms live in {VARS}")
        d = self.d if self.d >= 0 else p.degree()
        if d < 0:
            raise ValueError("the zero polynomial needs an explicit degree")
        object.__setattr__(self, "d", d)
        if not p.is_homogeneous(d):
            raise ValueError(f"not homogeneous of degree {d}")
        lap = laplacian(p)
        if _is_numeric(p):
            if _coeff_norm(lap) > 1e-10 * max(_coeff_norm(p), 1e-300):
                raise ValueError("polynomial is not harmonic (numeric tolerance)")
        elif lap:
            raise ValueError("polynomial is not harmonic")

    def __call__(self, point: Sequence):
        return self.poly.evaluate(point)

    def __add__(self, other: HarmonicForm) -> HarmonicForm:
        return HarmonicForm(self.poly + other.poly, self.d)

    def __sub__(self, other: HarmonicForm) -> HarmonicForm:
        return HarmonicForm(self.poly - other.poly, self.d)

    def __rmul__(self, c) -> HarmonicForm:
        return HarmonicForm(c * self.poly, self.d)

    def is_zero(self) -> bool:
        return self.poly.is_zero()


class BinaryForm2d(BinaryForm):
    """Binary form of even degree ``2d``; ``coeffs[k]`` multiplies ``z1^(2d-k) z2^k``."""

    def __init__(self, coeffs: Sequence):
        super().__init__(coeffs)
        if self.degree % 2:
            raise ValueError("binary form must have even degree")

    @property
    def d(self) -> int:
        return self.degree // 2


# -- pairing and Lie action ---------------------------------------------------


@lru_cache(maxsize=None)
def _bombieri_weight(exp: tuple[int, ...]) -> Fraction:
    num = 1
    for k in exp:
        num *= factorial(k)
    return Fraction(num, factorial(sum(exp)))


def bombieri_pairing(f, g):
    """``(f, g) = sum_alpha (alpha!/d!) f_alpha g_alpha``; bilinear, not Hermitian."""
    fp = f.poly if isinstance(f, HarmonicForm) else f
    gp = g.poly if isinstance(g, HarmonicForm) else g
    if fp.variables != gp.variables:
        raise ValueError("pairing needs a common ring")
    if not fp.is_homogeneous() or not gp.is_homogeneous():
        raise ValueError("pairing is defined on homogeneous forms")
    if fp.terms and gp.terms and fp.degree() != gp.degree():
        raise ValueError("pairing needs equal degrees")
    small, large = (fp, gp) if len(fp.terms) <= len(gp.terms) else (gp, fp)
    total = 0
    for e, c in small.terms.items():
        other = large.terms.get(e)
        if other is not None:
            total = total + _bombieri_weight(e) * c * other
    return total


def lie_action(u: Sequence, f):
    """Infinitesimal rotation: ``(u.f)(x) = grad f(x) . (x x u)``."""
    p = f.poly if isinstance(f, HarmonicForm) else f
    xs = [MultiPoly.var(v, p.variables) for v in p.variables]
    field_ = cross(xs, [MultiPoly.constant(c, p.variables) for c in u])
    out = MultiPoly(p.variables)
    for i in range(3):
        if field_[i]:
            out = out + p.partial(i) * field_[i]
    if isinstance(f, HarmonicForm):
        return HarmonicForm(out, f.d)
    return out


def omega(x: Sequence, u, v):
    """The skew form ``omega_x(u, v) = (x.u, v)``."""
    return bombieri_pairing(lie_action(x, u), v)


def rotate_form(f, g: Sequence[Sequence]):
    """``(g.f)(x) = f(g^T x)`` for an orthogonal matrix ``g``."""
    p = f.poly if isinstance(f, HarmonicForm) else f
    out = p.linear_change(transpose(g))
    return HarmonicForm(out, f.d) if isinstance(f, HarmonicForm) else out


# -- distinguished vectors ------------------------------------------------------


def project_fa(a: Sequence) -> HarmonicForm:
    """``f_a = (x, a)^3 - (3/5)(a, a)(x, a)(x, x)``."""
    la = linear(a)
    aa = ip(a, a)
    poly = la ** 3
    if aa != 0:
        poly = poly - Fraction(3, 5) * aa * la * quadric()
    return HarmonicForm(poly, 3)


def null_param(z1=None, z2=None):
    """``a(z) = (z1^2 - z2^2, i(z1^2 + z2^2), 2 z1 z2)``.

    With no arguments returns the symbolic vector over ``Q(i)[z1, z2]``.
    """
    if z1 is None and z2 is None:
        z1 = MultiPoly.var("z1", BINARY_VARS)
        z2 = MultiPoly.var("z2", BINARY_VARS)
    return (z1 * z1 - z2 * z2, I * (z1 * z1 + z2 * z2), 2 * z1 * z2)


@lru_cache(maxsize=None)
def _symbolic_null():
    return null_param()


def cubic_to_sextic(f) -> BinaryForm2d:
    """Restrict a harmonic form to the null conic: ``p(z) = f(a(z))``."""
    p = f.poly if isinstance(f, HarmonicForm) else f
    d = p.degree() if p.terms else (f.d if isinstance(f, HarmonicForm) else 0)
    null = list(_symbolic_null())
    numeric = [c for c in p.terms.values() if not is_exact(c)]
    if numeric:
        ctx = getattr(numeric[0], "context", mpmath.mp)
        null = [q.map_coefficients(lambda c: to_mpc(c, ctx)) for q in null]
    image = p.substitute(null)
    coeffs = []
    for k in range(2 * d + 1):
        c = image.coefficient((2 * d - k, k))
        coeffs.append(simplify(c) if is_exact(c) else c)
    return BinaryForm2d(coeffs)


@lru_cache(maxsize=None)
def rational_harmonic_basis(d: int) -> tuple[MultiPoly, ...]:
    """A basis of degree-``d`` harmonics with rational coefficients (Laplacian kernel)."""
    src = monomials(3, d)
    if d < 2:
        return tuple(MultiPoly(VARS, {e: 1}) for e in src)
    dst = monomials(3, d - 2)
    index = {e: i for i, e in enumerate(dst)}
    mat = [[0] * len(src) for _ in dst]
    for j, e in enumerate(src):
        for e2, c in laplacian(MultiPoly(VARS, {e: 1})).terms.items():
            mat[index[e2]][j] = c
    return tuple(
        MultiPoly(VARS, {e: c for e, c in zip(src, v) if c != 0}) for v in kernel_basis(mat)
    )


@lru_cache(maxsize=None)
def _sextic_matrix(d: int):
    """Columns: binary coefficients of the rational harmonic basis; and its inverse."""
    basis = rational_harmonic_basis(d)
    cols = [cubic_to_sextic(HarmonicForm(b, d)).coeffs for b in basis]
    m = transpose([list(c) for c in cols])
    return m, inverse(m)


def sextic_to_cubic(p: BinaryForm) -> HarmonicForm:
    """Inverse of :func:`cubic_to_sextic`."""
    if p.degree % 2:
        raise ValueError("binary form must have even degree")
    d = p.degree // 2
    _, minv = _sextic_matrix(d)
    basis = rational_harmonic_basis(d)
    coords = [sum((minv[i][k] * p.coeffs[k] for k in range(len(p.coeffs))), 0) for i in range(len(basis))]
    poly = MultiPoly(VARS)
    for c, b in zip(coords, basis):
        if c != 0:
            poly = poly + (simplify(c) if is_exact(c) else c) * b
    return HarmonicForm(poly, d)


# -- weight basis ---------------------------------------------------------------

H_VEC = (0, 0, I)
NPLUS_VEC = (1, I, 0)
NMINUS_VEC = (1, -I, 0)


def harmonic_basis(d: int) -> list[HarmonicForm]:
    """Weight basis ``v_d, ..., v_-d`` with ``v_d = (x1 + i x2)^d`` and ``v_(m-1) = n- v_m``."""
    if not 1 <= d <= 8:
        raise ValueError("harmonic_basis supports 1 <= d <= 8")
    v = linear((1, I, 0)) ** d
    out = [HarmonicForm(v, d)]
    for _ in range(2 * d):
        v = lie_action(NMINUS_VEC, v)
        out.append(HarmonicForm(v, d))
    return out


def _ratio(p: MultiPoly, q: MultiPoly):
    """Scalar ``c`` with ``p = c q`` (exact), or raise."""
    if not p.terms:
        return 0
    e, c = next(iter(q.terms.items()))
    r = p.coefficient(e) / c
    if p != r * q:
        raise ValueError("not proportional")
    return r


@dataclass(frozen=True)
class WeightBasis:
    """Weight vectors with the operator matrices of h, n+, n- in their coordinates.

    Index ``k`` corresponds to weight ``d - k``. ``gram[k][l] = (v_k, v_l)``.
    """

    d: int
    vectors: tuple[HarmonicForm, ...]
    h: tuple
    n_plus: tuple
    n_minus: tuple
    gram: tuple

    @property
    def weights(self) -> list[int]:
        return [self.d - k for k in range(2 * self.d + 1)]

    def omega(self, op: Sequence[Sequence]) -> list[list]:
        """Matrix of ``(X v_k, v_l)`` for an operator matrix ``X``."""
        return matmul(transpose(op), [list(r) for r in self.gram])


@lru_cache(maxsize=None)
def weight_basis(d: int) -> WeightBasis:
    vecs = harmonic_basis(d)
    n = len(vecs)

    def op_matrix(u):
        m = [[0] * n for _ in range(n)]
        for k, v in enumerate(vecs):
            w = lie_action(u, v.poly)
            if not w.terms:
                continue
            # Weight vectors are mapped to weight vectors, so w is a multiple of one v_l.
            for l, t in enumerate(vecs):
                try:
                    r = _ratio(w, t.poly)
                except ValueError:
                    continue
                m[l][k] = r
                break
            else:
                raise AssertionError("operator left the weight basis")
        return tuple(tuple(r) for r in m)

    gram = tuple(tuple(bombieri_pairing(a, b) for b in vecs) for a in vecs)
    return WeightBasis(d, tuple(vecs), op_matrix(H_VEC), op_matrix(NPLUS_VEC), op_matrix(NMINUS_VEC), gram)


def enumerate_isotropic_weight_subsets(d: int) -> list[frozenset[int]]:
    """All ``d``-element sets of weights whose weight spaces form an isotropic subspace.

    Brute force over every subset against ``omega`` for h, n+ and n-.
    """
    if not 1 <= d <= 8:
        raise ValueError("enumeration supports 1 <= d <= 8")
    wb = weight_basis(d)
    n = 2 * d + 1
    bad = [[False] * n for _ in range(n)]
    for op in (wb.h, wb.n_plus, wb.n_minus):
        om = wb.omega(op)
        for k in range(n):
            for l in range(n):
                if om[k][l] != 0:
                    bad[k][l] = bad[l][k] = True
    found = []
    for subset in combinations(range(n), d):
        if all(not bad[k][l] for k in subset for l in subset):
            found.append(frozenset(wb.weights[k] for k in subset))
    return found


# -- icosahedron ------------------------------------------------------------------


def _is_proportional(u: Sequence, v: Sequence) -> bool:
    return all(c == 0 for c in cross(u, v))


@dataclass(frozen=True)
class Icosahedron:
    """Six axes ``a_1..a_6`` (one vertex from each antipodal pair)."""

    axes: tuple

    def __post_init__(self):
        if len(self.axes) != 6:
            raise ValueError("an icosahedron has six axes")
        for i, j in combinations(range(6), 2):
            ai, aj = self.axes[i], self.axes[j]
            if _is_proportional(ai, aj):
                raise ValueError(f"axes {i} and {j} are proportional")
            if ip(ai, aj) ** 2 - Fraction(1, 5) * ip(ai, ai) * ip(aj, aj) != 0:
                raise ValueError(f"axes {i} and {j} violate the icosahedral angle relation")

    def rotated(self, g: Sequence[Sequence]) -> Icosahedron:
        return Icosahedron(tuple(apply(g, a) for a in self.axes))

    def vertices(self) -> list[Vector]:
        return list(self.axes) + [tuple(-c for c in a) for a in self.axes]


def standard_icosahedron() -> Icosahedron:
    """Axes (0,1,phi), (0,-1,phi), (1,phi,0), (-1,phi,0), (phi,0,1), (phi,0,-1)."""
    phi = PHI
    return Icosahedron(
        ((0, 1, phi), (0, -1, phi), (1, phi, 0), (-1, phi, 0), (phi, 0, 1), (phi, 0, -1))
    )


def icosahedral_generators() -> tuple[list[list], list[list]]:
    """A half-turn and a fifth-of-a-turn about ``(0, 1, phi)``; together they generate G."""
    half = QSqrt5(Fraction(1, 2))
    phi2 = PHI * half
    psi2 = (PHI - 1) * half
    half_turn = [[-1, 0, 0], [0, -1, 0], [0, 0, 1]]
    fivefold = [
        [psi2, phi2, -half],
        [-phi2, half, psi2],
        [half, psi2, phi2],
    ]
    return half_turn, fivefold


def _key(m):
    return tuple(tuple(simplify(x) for x in row) for row in m)


@lru_cache(maxsize=None)
def _group_cache():
    gens = icosahedral_generators()
    start = identity(3)
    seen = {_key(start): start}
    frontier = [start]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = matmul(s, g)
                k = _key(h)
                if k not in seen:
                    seen[k] = h
                    nxt.append(h)
        frontier = nxt
    return tuple(seen.values())


def icosahedral_group() -> list[list[list]]:
    """All elements, by breadth-first closure of the generators."""
    return [ [list(r) for r in g] for g in _group_cache()]


def permutes_axes(g: Sequence[Sequence], ico: Icosahedron) -> bool:
    verts = {tuple(simplify(c) for c in v) for v in ico.vertices()}
    return all(tuple(simplify(c) for c in apply(g, v)) in verts for v in ico.vertices())


# -- isotropic subspaces ---------------------------------------------------------

BASIS_E = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@dataclass(frozen=True)
class IsotropicSubspace:
    d: int
    basis: tuple[HarmonicForm, ...]
    kind: str  # nondegenerate | type1 | type2 | weight-family
    certificate: tuple = ()  # every omega_{e_k}(u_i, u_j), all exactly zero

    def __post_init__(self):
        if len(self.basis) != self.d:
            raise ValueError(f"expected {self.d} basis vectors, got {len(self.basis)}")


def isotropy_pairings(basis: Sequence) -> list:
    """``omega_{e_k}(u_i, u_j)`` for k = 1..3 and i < j."""
    out = []
    for x in BASIS_E:
        for i, j in combinations(range(len(basis)), 2):
            out.append(omega(x, basis[i], basis[j]))
    return out


def coefficient_matrix(forms: Sequence) -> list[list]:
    """Rows of monomial coefficients (graded-lex order) for forms of a common degree."""
    polys = [f.poly if isinstance(f, HarmonicForm) else f for f in forms]
    d = max(p.degree() for p in polys)
    mons = monomials(3, d)
    return [[p.coefficient(e) for e in mons] for p in polys]


def independent_subset(forms: Sequence) -> list:
    """Greedy maximal linearly independent subsequence."""
    chosen: list = []
    for f in forms:
        trial = chosen + [f]
        if rank(coefficient_matrix(trial)) == len(trial):
            chosen = trial
    return chosen


def isotropic_span(ico: Icosahedron | Sequence[Sequence]) -> IsotropicSubspace:
    """The span of ``f_{a_i}`` with an exact isotropy certificate."""
    axes = ico.axes if isinstance(ico, Icosahedron) else tuple(ico)
    forms = [project_fa(a) for a in axes]
    basis = independent_subset(forms)
    if len(basis) != 3:
        raise ValueError(f"span of f_a has dimension {len(basis)}, expected 3")
    cert = isotropy_pairings(basis)
    if any(c != 0 for c in cert):
        raise NotIsotropicError("span of f_a is not isotropic")
    return IsotropicSubspace(3, tuple(basis), "nondegenerate", tuple(cert))


def degenerate_subspace(kind: str, a: Sequence, b: Sequence) -> IsotropicSubspace:
    """Type 1 (weights {0,2,3}) or type 2 (weights {1,2,3}) degenerate subspace."""
    if ip(a, a) != 0:
        raise ValueError("a must be null")
    if ip(a, b) != 0:
        raise ValueError("a and b must be orthogonal")
    la, lb = linear(a), linear(b)
    bb = ip(b, b)
    if kind == "type1":
        if bb == 0:
            raise ValueError("type 1 needs (b, b) != 0")
        first = project_fa(b).poly
    elif kind == "type2":
        first = la * (lb * lb - Fraction(1, 5) * bb * quadric())
    else:
        raise ValueError(f"unknown kind {kind!r}")
    basis = tuple(HarmonicForm(p, 3) for p in (first, la * la * lb, la ** 3))
    if rank(coefficient_matrix(basis)) != 3:
        raise ValueError("degenerate basis is not three-dimensional")
    cert = isotropy_pairings(basis)
    if any(c != 0 for c in cert):
        raise NotIsotropicError(f"{kind} subspace is not isotropic")
    return IsotropicSubspace(3, basis, kind, tuple(cert))


def axis_weight(f, axis: Sequence):
    """Weight of ``f`` for rotations about ``axis`` with ``(axis, axis) = 1``.

    Returns ``m`` with ``i * (axis . f) = m f``, or ``None`` if ``f`` is not a
    weight vector.
    """
    p = f.poly if isinstance(f, HarmonicForm) else f
    w = lie_action(tuple(I * c for c in axis), p)
    try:
        return simplify(_ratio(w, p))
    except ValueError:
        return None


@dataclass(frozen=True)
class CoalescenceReport:
    holds: bool
    coefficients: tuple  # coefficients of t^0..t^3 as polynomials in x


def coalescence_expansion(a: Sequence, b: Sequence) -> CoalescenceReport:
    """Check ``f_(a+tb) = (a,x)^3 + 3t(a,x)^2(b,x) + 3t^2 (a,x)((b,x)^2 - (b,b)(x,x)/5) + t^3 f_b``."""
    if ip(a, a) != 0 or ip(a, b) != 0:
        raise ValueError("need (a, a) = 0 and (a, b) = 0")
    ring = ("t",) + VARS
    t = MultiPoly.var("t", ring)
    c = [MultiPoly.constant(ai, ring) + t * bi for ai, bi in zip(a, b)]
    xs = [MultiPoly.var(v, ring) for v in VARS]
    lc = c[0] * xs[0] + c[1] * xs[1] + c[2] * xs[2]
    cc = c[0] * c[0] + c[1] * c[1] + c[2] * c[2]
    q = xs[0] * xs[0] + xs[1] * xs[1] + xs[2] * xs[2]
    lhs = lc ** 3 - Fraction(3, 5) * lc * cc * q
    la, lb = linear(a), linear(b)
    bb = ip(b, b)
    coeffs = (
        la ** 3,
        3 * la * la * lb,
        3 * la * (lb * lb - Fraction(1, 5) * bb * quadric()),
        project_fa(b).poly,
    )
    rhs = MultiPoly(ring)
    for k, p in enumerate(coeffs):
        rhs = rhs + (t ** k) * p.extend(ring)
    return CoalescenceReport(lhs == rhs, coeffs)


def to_numeric(f, ctx=mpmath.mp) -> MultiPoly:
    p = f.poly if isinstance(f, HarmonicForm) else f
    return p.map_coefficients(lambda c: to_mpc(c, ctx))
