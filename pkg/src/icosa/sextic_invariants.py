"""Invariants of binary sextics and the icosahedral-set classifier for cubics.

Sextics are ``sum_k u_k z1^(6-k) z2^k``; in the inhomogeneous coordinate
``x = z1/z2`` this is ``u_0 x^6 + ... + u_6``. Roots are kept projectively as
pairs ``[x : y]`` with bracket ``(ij) = x_i y_j - x_j y_i``; a finite root ``r``
is ``[r : 1]`` and a root at infinity is ``[-1 : 0]``, so that
``p = lam * prod (y_i z1 - x_i z2)`` with ``lam = u_m`` when ``m`` roots sit at
infinity. With ``m = 0`` the brackets are ordinary root differences.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import mpmath

from .exact_core import upoly
from .exact_core.linalg import _inverse_scalar
from .exact_core.resultant import BinaryForm, resultant, sylvester_matrix
from .exact_core.roots import complex_roots
from .exact_core.scalars import is_exact, simplify, to_mpc
from .so3_rep import BinaryForm2d, HarmonicForm, cubic_to_sextic


# -- input normalisation ----------------------------------------------------------


def as_binary_form(p) -> BinaryForm:
    if isinstance(p, HarmonicForm):
        return cubic_to_sextic(p)
    if isinstance(p, BinaryForm):
        return p
    return BinaryForm2d(list(p))


def _is_exact_form(p: BinaryForm) -> bool:
    return all(is_exact(c) for c in p.coeffs)


def _check_sextic(p: BinaryForm) -> None:
    if p.degree != 6:
        raise ValueError(f"expected a sextic, got degree {p.degree}")
    if p.is_zero():
        raise ValueError("the zero sextic has no invariants")


# -- discriminant -------------------------------------------------------------------


def discriminant_normalizer(n: int) -> int:
    """``c_n`` with ``Res(dp/dz1, dp/dz2) = c_n * Delta`` for binary forms of degree ``n``.

    ``c_n = (-1)^(n(n-1)/2) n^(n-2)``; for sextics ``c_6 = -1296``, which is what
    makes ``Delta(z1^6 - z2^6) = 6^6``.
    """
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * n ** (n - 2)


def _numeric_det(rows, ctx):
    return ctx.det(ctx.matrix([[to_mpc(c, ctx) for c in r] for r in rows]))


def discriminant(p, method: str = "resultant", precision: int = 128):
    """``Delta = u_0^(2n-2) prod_{i<j} (ij)^2``, for a binary form of degree ``n >= 2``.

    ``method="resultant"`` is exact on exact input (and an mpmath determinant on
    numeric input); ``method="roots"`` uses numeric projective roots.
    """
    p = as_binary_form(p)
    if p.is_zero():
        raise ValueError("discriminant of the zero form")
    n = p.degree
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    if method == "roots":
        roots = projective_roots(p, precision)
        ctx = roots.ctx
        prod = ctx.mpc(1)
        pts = roots.points
        for i in range(n):
            for j in range(i + 1, n):
                prod *= _bracket(pts[i], pts[j]) ** 2
        return roots.lam ** (2 * n - 2) * prod
    if method != "resultant":
        raise ValueError(f"unknown method {method!r}")
    dz1, dz2 = p.d_z1(), p.d_z2()
    c = discriminant_normalizer(n)
    if _is_exact_form(p):
        if dz1.is_zero() or dz2.is_zero():
            return 0
        return simplify(resultant(dz1, dz2) * _inverse_scalar(c))
    ctx = mpmath.MPContext()
    ctx.prec = 2 * precision
    if dz1.is_zero() or dz2.is_zero():
        return ctx.mpc(0)
    return _numeric_det(sylvester_matrix(dz1, dz2), ctx) / c


# -- projective roots -----------------------------------------------------------------


@dataclass(frozen=True)
class ProjectiveRoots:
    lam: mpmath.mpc
    points: tuple  # n pairs (x, y), repeated by multiplicity
    multiplicities: tuple[tuple[tuple, int], ...]  # distinct roots with multiplicity
    ctx: object = field(repr=False)
    working_precision: int = 0
    exact_multiplicities: bool = False


INFINITY = (-1, 0)


def projective_roots(p, precision: int = 128) -> ProjectiveRoots:
    """Numeric projective roots of a binary form.

    On exact input the multiplicities are exact (squarefree decomposition) and
    only simple roots are approximated; on numeric input nearby approximants are
    clustered.
    """
    p = as_binary_form(p)
    if p.is_zero():
        raise ValueError("roots of the zero form")
    coeffs = list(p.coeffs)
    m = 0
    while coeffs[m] == 0:
        m += 1
    q = coeffs[m:]
    ctx = mpmath.MPContext()
    distinct: list[tuple[tuple, int]] = []
    wp = 2 * precision + 16
    exact = _is_exact_form(p)
    if len(q) > 1:
        if exact:
            for factor, mult in upoly.squarefree_decomposition(q):
                rep = complex_roots(factor, precision, ctx=ctx)
                wp = max(wp, rep.working_precision)
                for r in rep.flat():
                    distinct.append(((r, ctx.mpc(1)), mult))
        else:
            rep = complex_roots(q, precision, ctx=ctx)
            wp = rep.working_precision
            for r in rep.roots:
                distinct.append(((r.value, ctx.mpc(1)), r.multiplicity))
    ctx.prec = wp
    if m:
        distinct.append(((ctx.mpc(INFINITY[0]), ctx.mpc(INFINITY[1])), m))
    points = []
    for pt, mult in distinct:
        points.extend([pt] * mult)
    lam = to_mpc(q[0], ctx)
    return ProjectiveRoots(lam, tuple(points), tuple(distinct), ctx, wp, exact)


def _bracket(a, b):
    return a[0] * b[1] - b[0] * a[1]


# -- Igusa A, B, C ----------------------------------------------------------------


def perfect_matchings(items: Sequence[int]) -> list[tuple[tuple[int, int], ...]]:
    items = list(items)
    if not items:
        return [()]
    first, rest = items[0], items[1:]
    out = []
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for sub in perfect_matchings(remaining):
            out.append(((first, partner),) + sub)
    return out


@lru_cache(maxsize=None)
def matchings_15() -> tuple:
    return tuple(perfect_matchings(range(6)))


@lru_cache(maxsize=None)
def triple_splits_10() -> tuple:
    """Unordered partitions of ``{0..5}`` into two triples; the first contains 0."""
    out = []
    for rest in itertools.combinations(range(1, 6), 2):
        t1 = (0,) + rest
        t2 = tuple(i for i in range(6) if i not in t1)
        out.append((t1, t2))
    return tuple(out)


@lru_cache(maxsize=None)
def c_configurations_60() -> tuple:
    """A triple split plus a bijection between the two triples."""
    return tuple(
        (t1, perm) for t1, t2 in triple_splits_10() for perm in itertools.permutations(t2)
    )


def _triangle(sq, t):
    a, b, c = t
    return sq[a][b] * sq[b][c] * sq[c][a]


def igusa_ABC_from_roots(roots: ProjectiveRoots):
    ctx = roots.ctx
    pts = roots.points
    if len(pts) != 6:
        raise ValueError("Igusa invariants are defined for sextics")
    sq = [[_bracket(pts[i], pts[j]) ** 2 for j in range(6)] for i in range(6)]
    a_sum = ctx.mpc(0)
    for (i, j), (k, l), (m, n) in matchings_15():
        a_sum += sq[i][j] * sq[k][l] * sq[m][n]
    b_sum = ctx.mpc(0)
    for t1, t2 in triple_splits_10():
        b_sum += _triangle(sq, t1) * _triangle(sq, t2)
    c_sum = ctx.mpc(0)
    for t1, perm in c_configurations_60():
        t2 = tuple(sorted(perm))
        cross = sq[t1[0]][perm[0]] * sq[t1[1]][perm[1]] * sq[t1[2]][perm[2]]
        c_sum += _triangle(sq, t1) * _triangle(sq, t2) * cross
    lam = roots.lam
    return lam ** 2 * a_sum, lam ** 4 * b_sum, lam ** 6 * c_sum


def igusa_ABC(p, precision: int = 128):
    """``(A, B, C)`` from numeric projective roots (``mpc`` values)."""
    p = as_binary_form(p)
    _check_sextic(p)
    return igusa_ABC_from_roots(projective_roots(p, precision))


def j6_from_abc(A, B, C):
    return A ** 3 / 221184 + 5 * A * B / 13824 - C / 576


@dataclass(frozen=True)
class SexticInvariants:
    A: object
    B: object
    C: object
    Delta: object
    J6: object
    J10: object
    method: str  # how Delta was obtained: "resultant" or "root-product"
    precision: int


def j_invariants(p, precision: int = 128, method: str = "resultant") -> SexticInvariants:
    p = as_binary_form(p)
    _check_sextic(p)
    roots = projective_roots(p, precision)
    A, B, C = igusa_ABC_from_roots(roots)
    if method == "resultant":
        delta = discriminant(p, "resultant", precision)
        tag = "resultant"
    else:
        delta = discriminant(p, "roots", precision)
        tag = "root-product"
    if is_exact(delta):
        j10 = simplify(delta * _inverse_scalar(4096))
    else:
        j10 = delta / 4096
    return SexticInvariants(A, B, C, delta, j6_from_abc(A, B, C), j10, tag, precision)


# -- J6 zero test ---------------------------------------------------------------------


def _coeff_scale(p: BinaryForm):
    return max(abs(complex(to_mpc(c))) for c in p.coeffs)


def _j6_small(inv: SexticInvariants, scale, precision: int) -> bool:
    ctx = mpmath.MPContext()
    ctx.prec = 2 * precision
    s = ctx.mpf(scale)
    a = abs(ctx.mpc(inv.A)) / s ** 2
    b = abs(ctx.mpc(inv.B)) / s ** 4
    c = abs(ctx.mpc(inv.C)) / s ** 6
    j6 = abs(ctx.mpc(inv.J6)) / s ** 6
    bound = ctx.mpf(2) ** (-ctx.mpf(precision) / 3) * max(1, a ** 3 + a * b + c)
    return j6 < bound


def j6_is_zero(p, precision: int = 128, invariants: SexticInvariants | None = None) -> bool:
    """``|J6| < 2^(-precision/3) max(1, |A|^3 + |A||B| + |C|)`` on the max-normalised sextic.

    A positive answer is confirmed at doubled precision before it is returned.
    """
    p = as_binary_form(p)
    _check_sextic(p)
    scale = _coeff_scale(p)
    inv = invariants or j_invariants(p, precision)
    if not _j6_small(inv, scale, precision):
        return False
    return _j6_small(j_invariants(p, 2 * precision), scale, 2 * precision)


# -- root profile ---------------------------------------------------------------------


HARMONIC_CROSS_RATIOS = (-1, 2, 0.5)


@dataclass(frozen=True)
class RootProfile:
    partition: tuple[int, ...]
    is_square_of_cubic: bool
    has_harmonic_double_pair: bool
    cross_ratio: object = None  # (double, double; simple, simple) when partition is [2,2,1,1]
    exact_multiplicities: bool = False

    def __post_init__(self):
        if sum(self.partition) != 6:
            raise ValueError("partition must sum to 6")


def cross_ratio(a, b, c, d):
    """``(a, b; c, d) = (ac)(bd) / ((ad)(bc))`` on projective pairs."""
    return _bracket(a, c) * _bracket(b, d) / (_bracket(a, d) * _bracket(b, c))


def root_profile(p, precision: int = 128) -> RootProfile:
    """Multiplicity partition and the two special double-root patterns.

    ``is_square_of_cubic`` means three distinct double roots (``p = q^2`` with
    ``q`` squarefree; then ``gcd(p, p')`` has degree 3). The harmonic pattern
    is two double and two simple roots with ``(double, double; simple, simple)``
    in the harmonic class ``{-1, 2, 1/2}``.
    """
    p = as_binary_form(p)
    _check_sextic(p)
    roots = projective_roots(p, precision)
    part = tuple(sorted((m for _, m in roots.multiplicities), reverse=True))
    square = part == (2, 2, 2)
    harmonic = False
    cr = None
    if part == (2, 2, 1, 1):
        ctx = roots.ctx
        doubles = [pt for pt, m in roots.multiplicities if m == 2]
        simples = [pt for pt, m in roots.multiplicities if m == 1]
        cr = cross_ratio(doubles[0], doubles[1], simples[0], simples[1])
        tol = ctx.mpf(2) ** (-ctx.mpf(precision) / 4)
        harmonic = any(abs(cr - t) < tol * max(1, abs(cr)) for t in HARMONIC_CROSS_RATIOS)
    return RootProfile(part, square, harmonic, cr, roots.exact_multiplicities)


# -- classifier ---------------------------------------------------------------------------


class Verdict(str, enum.Enum):
    TWO = "TwoIcosahedralSets"
    ONE = "ExactlyOne"
    INFINITE = "InfinitelyMany"
    DEGENERATE_ONLY = "DegenerateOnly"


@dataclass(frozen=True)
class ClassificationFlags:
    delta_zero: bool
    j6_zero: bool
    square_of_cubic: bool
    harmonic_double_pair: bool
    # informational only; the verdict ignores these
    null_cone: bool = False  # some root of multiplicity >= 4
    multiple_roots: int = 0  # number of distinct multiple roots

    def as_dict(self) -> dict:
        return {
            "delta_zero": self.delta_zero,
            "j6_zero": self.j6_zero,
            "square_of_cubic": self.square_of_cubic,
            "harmonic_double_pair": self.harmonic_double_pair,
            "null_cone": self.null_cone,
            "multiple_roots": self.multiple_roots,
        }


def decide_verdict(flags: ClassificationFlags) -> Verdict:
    """The decision table; a pure function of the four main flags.

    ``delta_zero`` does not change the verdict: degenerate isotropic
    subspaces can sit alongside any count. ``DegenerateOnly`` is never
    produced here; the solver summary uses it when it finds no
    nondegenerate set.
    """
    if not flags.j6_zero:
        return Verdict.TWO
    if flags.square_of_cubic or flags.harmonic_double_pair:
        return Verdict.INFINITE
    return Verdict.ONE


@dataclass(frozen=True)
class BundleClassification:
    verdict: Verdict
    flags: ClassificationFlags
    invariants: SexticInvariants
    profile: RootProfile
    sextic: BinaryForm


def classify_bundle(f, precision: int = 128) -> BundleClassification:
    """Classify a harmonic cubic (or its sextic) by the number of icosahedral sets on it."""
    p = as_binary_form(f)
    _check_sextic(p)
    inv = j_invariants(p, precision)
    profile = root_profile(p, precision)
    if is_exact(inv.Delta):
        delta_zero = inv.Delta == 0
    else:
        delta_zero = any(m > 1 for m in profile.partition)
    flags = ClassificationFlags(
        delta_zero=delta_zero,
        j6_zero=j6_is_zero(p, precision, inv),
        square_of_cubic=profile.is_square_of_cubic,
        harmonic_double_pair=profile.has_harmonic_double_pair,
        null_cone=profile.partition[0] >= 4,
        multiple_roots=sum(1 for m in profile.partition if m > 1),
    )
    return BundleClassification(decide_verdict(flags), flags, inv, profile, p)
