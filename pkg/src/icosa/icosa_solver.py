"""Find the icosahedral sets lying on a plane cubic.

A harmonic cubic ``f`` contains the axes of the rotated icosahedron ``g.I``
iff ``f(g a_i) = 0`` for all six axes; since ``(f, f_a) = f(a)`` for harmonic
``f``, this says ``f`` is orthogonal to the isotropic subspace ``U(g)``. Any
three of the ``f_{a_i}`` span ``U``, so three equations suffice. They are
solved by multistart Newton over a Cayley chart
``g = (I + S)(I - S)^-1 g0`` of ``SO(3, C)``, and the solutions are merged
modulo the icosahedral group by comparing the unordered projective axes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

import mpmath
import numpy as np

from .exact_core.linalg import identity, inverse, kernel_basis, matmul
from .exact_core.poly import MultiPoly, monomials
from .exact_core.scalars import is_exact, simplify, to_complex, to_mpc
from .so3_rep import VARS, HarmonicForm, apply, rational_harmonic_basis, standard_icosahedron

log = logging.getLogger(__name__)

CUBIC_MONOMIALS = tuple(monomials(3, 3))
EQUATION_AXES = (0, 1, 2)  # any three f_{a_i} span U; pinned for reproducibility


class ChartSingularityError(ZeroDivisionError):
    """``I - S`` is singular: the point lies outside the Cayley chart."""


@dataclass(frozen=True)
class GroupParam:
    """``g = (I + S)(I - S)^-1 center`` with ``S v = s x v``."""

    s: tuple
    center: tuple | None = None  # 3x3 rows; identity when absent

    def __post_init__(self):
        if len(self.s) != 3:
            raise ValueError("a Cayley parameter has three components")


def skew(s: Sequence) -> list[list]:
    s1, s2, s3 = s
    return [[0, -s3, s2], [s3, 0, -s1], [-s2, s1, 0]]


def rotation_from_cayley(param: GroupParam | Sequence) -> list[list]:
    """The rotation of a Cayley parameter; exact when every ``s_k`` is exact."""
    if not isinstance(param, GroupParam):
        param = GroupParam(tuple(param))
    s = param.s
    if all(is_exact(c) for c in s) and (param.center is None or _exact_matrix(param.center)):
        S = skew(s)
        plus = [[(1 if i == j else 0) + S[i][j] for j in range(3)] for i in range(3)]
        minus = [[(1 if i == j else 0) - S[i][j] for j in range(3)] for i in range(3)]
        if simplify(1 + s[0] * s[0] + s[1] * s[1] + s[2] * s[2]) == 0:
            raise ChartSingularityError("1 + s.s = 0")
        g = matmul(plus, inverse(minus))
        if param.center is not None:
            g = matmul(g, [list(r) for r in param.center])
        return [[simplify(x) for x in row] for row in g]
    sv = np.array([to_complex(c) for c in s], dtype=complex)
    center = None if param.center is None else _to_np(param.center)
    g = _cayley_np(sv[None, :], None if center is None else center[None])[0]
    return g.tolist()


def _exact_matrix(m) -> bool:
    return all(is_exact(x) for row in m for x in row)


def _to_np(m) -> np.ndarray:
    return np.array([[to_complex(x) for x in row] for row in m], dtype=complex)


# -- numpy kernels --------------------------------------------------------------


def _skew_np(s: np.ndarray) -> np.ndarray:
    n = s.shape[0]
    S = np.zeros((n, 3, 3), dtype=complex)
    S[:, 0, 1] = -s[:, 2]
    S[:, 0, 2] = s[:, 1]
    S[:, 1, 0] = s[:, 2]
    S[:, 1, 2] = -s[:, 0]
    S[:, 2, 0] = -s[:, 1]
    S[:, 2, 1] = s[:, 0]
    return S


_E = np.zeros((3, 3, 3), dtype=complex)  # dS/ds_k
for _k in range(3):
    _e = np.zeros(3)
    _e[_k] = 1
    _E[_k] = _skew_np(_e[None, :].astype(complex))[0]


def _cayley_np(s: np.ndarray, centers: np.ndarray | None):
    S = _skew_np(s)
    eye = np.eye(3, dtype=complex)
    minus_inv = np.linalg.inv(eye - S)
    gc = (eye + S) @ minus_inv
    if centers is not None:
        return gc @ centers
    return gc


def _cubic_coeffs(f: HarmonicForm) -> np.ndarray:
    return np.array([to_complex(f.poly.coefficient(e)) for e in CUBIC_MONOMIALS], dtype=complex)


_EXP = np.array(CUBIC_MONOMIALS)  # (10, 3)


def _eval_cubic(c: np.ndarray, v: np.ndarray) -> np.ndarray:
    """``f(v)`` for ``v`` of shape (..., 3)."""
    powers = np.ones(v.shape[:-1] + (10,), dtype=complex)
    for k in range(3):
        powers = powers * v[..., k:k + 1] ** _EXP[:, k]
    return powers @ c


def _grad_cubic(c: np.ndarray, v: np.ndarray) -> np.ndarray:
    out = np.zeros(v.shape, dtype=complex)
    for k in range(3):
        red = _EXP.copy()
        mask = red[:, k] > 0
        red[:, k] = np.maximum(red[:, k] - 1, 0)
        coef = c * _EXP[:, k] * mask
        powers = np.ones(v.shape[:-1] + (10,), dtype=complex)
        for j in range(3):
            powers = powers * v[..., j:j + 1] ** red[:, j]
        out[..., k] = powers @ coef
    return out


# -- configuration and results ------------------------------------------------------


@dataclass(frozen=True)
class SolveConfig:
    starts: int = 200
    tol: float = 1e-10
    seed: int = 0
    precision: int = 128
    max_newton_iters: int = 60
    charts: int = 4  # number of chart centres the starts are spread over
    dedup_distance: float = 1e-6
    degenerate_cutoff: float = 1e-4  # min pairwise axis distance of an accepted set
    max_classes: int = 12  # stop early: beyond two classes only a family is possible

    def __post_init__(self):
        if self.starts < 1:
            raise ValueError("starts must be >= 1")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.charts < 1:
            raise ValueError("charts must be >= 1")
        if self.max_classes < 3:
            raise ValueError("max_classes must be >= 3 to detect families")


@dataclass(frozen=True)
class IcosaSolution:
    param: GroupParam
    g: tuple  # 3x3 complex rows
    axes: tuple  # six complex 3-vectors g a_i
    residual: float
    canonical_key: tuple


def _axis_array(axes=None) -> np.ndarray:
    axes = axes or standard_icosahedron().axes
    return np.array([[to_complex(c) for c in a] for a in axes], dtype=complex)


def projective_distance(u: Sequence, v: Sequence) -> float:
    """Sine of the Hermitian angle between ``[u]`` and ``[v]``, via the Lagrange identity."""
    u = np.array([to_complex(x) for x in u], dtype=complex)
    v = np.array([to_complex(x) for x in v], dtype=complex)
    wedge = 0.0
    for i in range(3):
        for j in range(i + 1, 3):
            wedge += abs(u[i] * v[j] - u[j] * v[i]) ** 2
    return float(np.sqrt(wedge) / (np.linalg.norm(u) * np.linalg.norm(v)))


def set_distance(axes1: Sequence, axes2: Sequence) -> float:
    """Max over ``axes1`` of the distance to the nearest point of ``axes2``."""
    return max(min(projective_distance(a, b) for b in axes2) for a in axes1)


def _min_pair_distance(axes: Sequence) -> float:
    return min(projective_distance(axes[i], axes[j]) for i in range(len(axes)) for j in range(i + 1, len(axes)))


def canonical_key(axes: Sequence, digits: int = 8) -> tuple:
    """Sorted fingerprints of the projective axes (each scaled by its largest entry)."""
    out = []
    for a in axes:
        a = np.asarray(a, dtype=complex)
        k = int(np.argmax(np.abs(a)))
        b = a / a[k]
        out.append(tuple((round(float(z.real), digits), round(float(z.imag), digits)) for z in b))
    return tuple(sorted(out))


def _normalized_residual(c: np.ndarray, v: np.ndarray) -> np.ndarray:
    """``max_i |f(v_i)| / (||f||_1 ||v_i||_inf^3)`` over the six axes, per start."""
    vals = np.abs(_eval_cubic(c, v))
    scale = np.sum(np.abs(c)) * np.max(np.abs(v), axis=-1) ** 3
    return np.max(vals / scale, axis=-1)


def residual_system(f: HarmonicForm, param: GroupParam | Sequence):
    """``f`` paired with the basis ``f_{g a_i}``, ``i`` in :data:`EQUATION_AXES`, of ``U(g)``.

    Exact parameters give exact values ``f(g a_i)``; the Cayley denominators are
    cleared by the factor ``(1 + s.s)^3``.
    """
    if not isinstance(param, GroupParam):
        param = GroupParam(tuple(param))
    g = rotation_from_cayley(param)
    axes = standard_icosahedron().axes
    s = param.s
    den = 1 + s[0] * s[0] + s[1] * s[1] + s[2] * s[2]
    out = []
    for i in EQUATION_AXES:
        v = apply(g, axes[i])
        val = f.poly.evaluate(v) * den ** 3
        out.append(simplify(val) if is_exact(val) else val)
    return tuple(out)


# -- Newton ------------------------------------------------------------------------------


def _random_exact_rotation(rng: np.random.Generator) -> list[list]:
    """Exactly orthogonal rational rotation, so that high-precision refinement stays on SO(3)."""
    from fractions import Fraction

    s = [Fraction(int(rng.integers(-12, 13)), int(rng.integers(1, 7))) for _ in range(3)]
    return rotation_from_cayley(GroupParam(tuple(s)))


def _newton_batch(c, a_all, s, centers, iters, tol):
    eye = np.eye(3, dtype=complex)
    a_eq = a_all[list(EQUATION_AXES)]
    alive = np.ones(len(s), dtype=bool)
    for _ in range(iters):
        S = _skew_np(s)
        with np.errstate(all="ignore"):
            try:
                minv = np.linalg.inv(eye - S)
            except np.linalg.LinAlgError:
                minv = np.linalg.pinv(eye - S)
            gc = (eye + S) @ minv
            g = gc @ centers
            v = np.einsum("nij,aj->nai", g, a_eq)
            F = _eval_cubic(c, v)
            grad = _grad_cubic(c, v)
            # dg/ds_k = (I + gc) E_k (I - S)^-1 center
            J = np.zeros((len(s), 3, 3), dtype=complex)
            base = np.einsum("nij,aj->nai", minv @ centers, a_eq)
            for k in range(3):
                dv = np.einsum("nij,jl,nal->nai", eye + gc, _E[k], base)
                J[:, :, k] = np.sum(grad * dv, axis=-1)
            step = np.einsum("nij,nj->ni", np.linalg.pinv(J), F)
            norm = np.linalg.norm(step, axis=1)
            cap = 1.0 + np.linalg.norm(s, axis=1)
            factor = np.where(norm > cap, cap / np.maximum(norm, 1e-300), 1.0)
            step = step * factor[:, None]
            step[~alive] = 0
            s = s - step
            bad = ~np.all(np.isfinite(s), axis=1)
            alive &= ~bad
            s[bad] = 0
    g = _cayley_np(s, centers)
    with np.errstate(all="ignore"):
        res = _normalized_residual(c, np.einsum("nij,aj->nai", g, a_all))
    res[~alive] = np.inf
    return s, g, res


def _refine_mp(f: HarmonicForm, s0, center, precision: int, iters: int = 40):
    """Polish one root with mpmath Newton at ``precision`` bits; returns (s, g, residual)."""
    ctx = mpmath.MPContext()
    ctx.prec = precision + 16
    coeffs = {e: to_mpc(f.poly.coefficient(e), ctx) for e in CUBIC_MONOMIALS}
    axes = [[to_mpc(x, ctx) for x in a] for a in standard_icosahedron().axes]
    C = ctx.matrix([[to_mpc(x, ctx) for x in row] for row in center])
    s = [ctx.mpc(complex(x)) for x in s0]
    eye = ctx.eye(3)

    def fval(v):
        return sum(c * v[0] ** e[0] * v[1] ** e[1] * v[2] ** e[2] for e, c in coeffs.items())

    def fgrad(v):
        out = []
        for k in range(3):
            tot = ctx.mpc(0)
            for e, c in coeffs.items():
                if e[k] == 0:
                    continue
                r = list(e)
                r[k] -= 1
                tot += c * e[k] * v[0] ** r[0] * v[1] ** r[1] * v[2] ** r[2]
            out.append(tot)
        return out

    def skew_mp(sv):
        return ctx.matrix([[0, -sv[2], sv[1]], [sv[2], 0, -sv[0]], [-sv[1], sv[0], 0]])

    Ek = [skew_mp([1 if j == k else 0 for j in range(3)]) for k in range(3)]
    for _ in range(iters):
        S = skew_mp(s)
        try:
            minv = ctx.inverse(eye - S)
        except ZeroDivisionError:
            break
        gc = (eye + S) * minv
        g = gc * C
        F = ctx.matrix(3, 1)
        J = ctx.matrix(3, 3)
        for row, i in enumerate(EQUATION_AXES):
            a = ctx.matrix(axes[i])
            v = g * a
            vv = [v[0], v[1], v[2]]
            F[row] = fval(vv)
            gr = fgrad(vv)
            base = minv * C * a
            for k in range(3):
                dv = (eye + gc) * Ek[k] * base
                J[row, k] = gr[0] * dv[0] + gr[1] * dv[1] + gr[2] * dv[2]
        # Minimum-norm step J^H (J J^H + mu I)^-1 F; stays well defined when the
        # solutions form a curve and J drops rank.
        JH = J.H
        mu = ctx.mpf(2) ** (-precision) * max(1, ctx.mnorm(J, 1) ** 2)
        try:
            y = ctx.lu_solve(J * JH + mu * eye, F)
        except ZeroDivisionError:
            break
        step = JH * y
        s = [s[k] - step[k] for k in range(3)]
        if max(abs(x) for x in step) < ctx.mpf(2) ** (-precision):
            break
    S = skew_mp(s)
    try:
        g = (eye + S) * ctx.inverse(eye - S) * C
    except ZeroDivisionError:
        return s, None, float("inf"), []
    l1 = sum(abs(c) for c in coeffs.values())
    res = ctx.mpf(0)
    vecs = []
    for a in axes:
        v = g * ctx.matrix(a)
        vv = [v[0], v[1], v[2]]
        vecs.append(vv)
        res = max(res, abs(fval(vv)) / (l1 * max(abs(x) for x in vv) ** 3))
    return s, g, float(res), vecs


def find_icosahedral_sets(f: HarmonicForm, config: SolveConfig | None = None) -> list[IcosaSolution]:
    """All icosahedral sets on ``{f = 0}`` reached from ``config.starts`` Newton starts.

    The result is sorted by canonical key and depends only on ``(f, config)``.
    An empty list means nothing converged within the budget.
    """
    config = config or SolveConfig()
    if f.d != 3:
        raise ValueError("find_icosahedral_sets needs a cubic")
    if f.is_zero():
        raise ValueError("the zero cubic contains every icosahedral set")
    rng = np.random.default_rng(config.seed)
    exact_centres = [identity(3)] + [_random_exact_rotation(rng) for _ in range(config.charts - 1)]
    chart_centres = [_to_np(m) for m in exact_centres]
    s0 = (rng.normal(size=(config.starts, 3)) + 1j * rng.normal(size=(config.starts, 3))) / np.sqrt(2)
    which = np.arange(config.starts) % config.charts
    centers = np.stack([chart_centres[k] for k in which])
    c = _cubic_coeffs(f)
    c = c / np.max(np.abs(c))
    a_all = _axis_array()
    s, g, res = _newton_batch(c, a_all, s0.astype(complex), centers, config.max_newton_iters, config.tol)
    # double precision cannot certify much below 1e-12; refine candidates in mpmath
    candidates = [n for n in np.argsort(res, kind="stable") if res[n] < 1e-7]
    log.debug("%d of %d starts converged to candidates", len(candidates), config.starts)
    classes: list[IcosaSolution] = []
    rejected: list[np.ndarray] = []
    for n in candidates:
        axes_np = np.einsum("ij,aj->ai", g[n], a_all)
        if any(set_distance(axes_np, sol.axes) < config.dedup_distance * 100 for sol in classes):
            continue
        if any(set_distance(axes_np, other) < config.dedup_distance * 100 for other in rejected):
            continue
        if config.precision > 53:
            s_mp, g_mp, r, vecs = _refine_mp(f, s[n], exact_centres[which[n]], config.precision)
            axes = tuple(tuple(complex(x) for x in v) for v in vecs)
            g_rows = tuple(tuple(complex(g_mp[i, j]) for j in range(3)) for i in range(3))
            s_val = tuple(complex(x) for x in s_mp)
        else:
            r = float(res[n])
            axes = tuple(tuple(complex(x) for x in v) for v in axes_np)
            g_rows = tuple(tuple(complex(x) for x in row) for row in g[n])
            s_val = tuple(complex(x) for x in s[n])
        # A genuine root refines to working precision; near-degenerate limits
        # (axes coalescing onto the null conic as g runs off to infinity) do not.
        if (
            r >= config.tol
            or (config.precision > 53 and r >= 2.0 ** (-config.precision / 2))
            or _min_pair_distance(axes) < config.degenerate_cutoff
        ):
            rejected.append(axes_np)
            continue
        if any(set_distance(axes, sol.axes) < config.dedup_distance for sol in classes):
            continue
        centre = tuple(tuple(x for x in row) for row in exact_centres[which[n]])
        classes.append(
            IcosaSolution(GroupParam(s_val, centre), g_rows, axes, r, canonical_key(axes))
        )
        if len(classes) >= config.max_classes:
            break
    classes.sort(key=lambda sol: sol.canonical_key)
    return classes


@dataclass(frozen=True)
class SolveSummary:
    class_count: int
    solutions: tuple[IcosaSolution, ...]
    infinitely_many_signature: bool
    verdict: str | None = None
    max_residual: float = 0.0
    notes: tuple[str, ...] = field(default=())

    @property
    def observed(self) -> str:
        """Verdict name read off the nondegenerate class count alone."""
        if self.infinitely_many_signature:
            return "InfinitelyMany"
        return ("DegenerateOnly", "ExactlyOne", "TwoIcosahedralSets")[self.class_count]


def summarize(f: HarmonicForm, solutions: Sequence[IcosaSolution], verdict: str | None = None) -> SolveSummary:
    """Attach the count-level interpretation to a solution list.

    A finite count is at most two, so more than two classes is the signature
    of a positive-dimensional family.
    """
    n = len(solutions)
    notes = []
    if verdict is not None and verdict != "TwoIcosahedralSets":
        notes.append("count contract void off the generic locus; verdict from the classifier")
    if n == 0:
        notes.append("no nondegenerate icosahedral set found")
    return SolveSummary(
        class_count=n,
        solutions=tuple(solutions),
        infinitely_many_signature=n > 2,
        verdict=verdict,
        max_residual=max((s.residual for s in solutions), default=0.0),
        notes=tuple(notes),
    )


# -- forward generation ---------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratedCubic:
    f: HarmonicForm
    g: list[list]
    axes: tuple
    kernel: tuple[MultiPoly, ...]  # basis of the cubics through the six axes


def generate_cubic_through(g: GroupParam | Sequence[Sequence] | None = None, seed: int = 0, coeff_range: int = 9) -> GeneratedCubic:
    """A seeded random harmonic cubic through the axes of ``g`` applied to the standard icosahedron.

    ``g`` may be an exact rotation matrix, a :class:`GroupParam` (exact or
    numeric) or ``None`` for the identity. The space of such cubics is the
    kernel of the 6x7 matrix ``h_j(g a_i)``, which has dimension 4.
    """
    import random

    if g is None:
        g = identity(3)
    elif isinstance(g, GroupParam):
        g = rotation_from_cayley(g)
    axes = tuple(tuple(apply(g, a)) for a in standard_icosahedron().axes)
    basis = rational_harmonic_basis(3)
    rng = random.Random(seed)
    exact = _exact_matrix(g)
    if exact:
        mat = [[simplify(h.evaluate(list(a))) for h in basis] for a in axes]
        kern = kernel_basis(mat)
    else:
        mat = np.array([[complex(h.map_coefficients(to_complex).evaluate(list(map(complex, a)))) for h in basis] for a in axes])
        _, sv, vh = np.linalg.svd(mat)
        kern = [list(row.conj()) for row in vh[3:]]
    if len(kern) != 4:
        raise ValueError(f"kernel has dimension {len(kern)}, expected 4")
    kernel_polys = []
    for v in kern:
        p = MultiPoly(VARS)
        for c, h in zip(v, basis):
            if c != 0:
                p = p + c * h
        kernel_polys.append(p)
    while True:
        weights = [rng.randint(-coeff_range, coeff_range) for _ in kernel_polys]
        if any(weights):
            break
    p = MultiPoly(VARS)
    for w, k in zip(weights, kernel_polys):
        if w:
            p = p + w * k
    return GeneratedCubic(HarmonicForm(p, 3), g, axes, tuple(kernel_polys))


def random_rational_param(rng, size: int = 5) -> GroupParam:
    """Cayley parameter with small random rational entries (gives an exact rotation)."""
    from fractions import Fraction

    return GroupParam(tuple(Fraction(rng.randint(-size, size), rng.randint(1, size)) for _ in range(3)))
