"""The Clebsch cubic surface as the blow-up of the plane at an icosahedral set.

Cubics through the six axes of the standard icosahedron form the
four-dimensional complement of the isotropic span ``U0``; it is spanned by the
five products ``P_k`` of the planes of the five orthogonal triples.
``b -> (P_1(b), ..., P_5(b))`` maps the plane onto the Clebsch surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import mpmath

from .exact_core.linalg import inverse, kernel_basis, matvec, rank, transpose
from .exact_core.poly import MultiPoly, monomials
from .exact_core.scalars import SQRT5, is_exact, simplify, to_mpc
from .so3_rep import (
    VARS,
    HarmonicForm,
    Icosahedron,
    apply,
    bombieri_pairing,
    coefficient_matrix,
    cross,
    icosahedral_generators,
    ip,
    isotropic_span,
    linear,
    null_param,
    rotate_form,
    standard_icosahedron,
)


def _proportional(u: Sequence, v: Sequence) -> bool:
    return all(simplify(c) == 0 for c in cross(u, v))


# -- orthogonal triples --------------------------------------------------------


@dataclass(frozen=True)
class OrthogonalTriple:
    vectors: tuple  # three pairwise orthogonal axes, not normalised
    norms: tuple  # (e_i, e_i)

    def __post_init__(self):
        for u, v in combinations(self.vectors, 2):
            if simplify(ip(u, v)) != 0:
                raise ValueError("triple is not pairwise orthogonal")

    def contains_axis(self, v: Sequence) -> bool:
        return any(_proportional(v, e) for e in self.vectors)


def twofold_axes(ico: Icosahedron) -> list[tuple]:
    """The 15 edge-midpoint axes ``v + w`` over adjacent vertices, one per antipodal pair."""
    verts = ico.vertices()
    products = {}
    for i, j in combinations(range(len(verts)), 2):
        products[(i, j)] = simplify(ip(verts[i], verts[j]))
    norm = simplify(ip(verts[0], verts[0]))
    # Adjacent vertices have the largest inner product short of the vertex itself.
    reals = {k: float(mpmath.re(to_mpc(v))) for k, v in products.items()}
    nearest = max(v for v in reals.values() if abs(v - float(mpmath.re(to_mpc(norm)))) > 1e-9)
    axes: list[tuple] = []
    for (i, j), val in reals.items():
        if abs(val - nearest) < 1e-9:
            mid = tuple(simplify(a + b) for a, b in zip(verts[i], verts[j]))
            if not any(_proportional(mid, other) for other in axes):
                axes.append(mid)
    return axes


def orthogonal_triples(ico: Icosahedron | None = None) -> list[OrthogonalTriple]:
    """The five triples of mutually orthogonal twofold axes.

    Each vertex lies in one of the three coordinate planes of every triple.
    """
    ico = ico or standard_icosahedron()
    axes = twofold_axes(ico)
    if len(axes) != 15:
        raise ValueError(f"expected 15 twofold axes, found {len(axes)}")
    triples = []
    used: set[int] = set()
    for i in range(15):
        if i in used:
            continue
        partners = [j for j in range(15) if j != i and simplify(ip(axes[i], axes[j])) == 0]
        if len(partners) != 2 or simplify(ip(axes[partners[0]], axes[partners[1]])) != 0:
            raise ValueError("twofold axes do not split into orthogonal triples")
        group = (i, *partners)
        used.update(group)
        vecs = tuple(axes[k] for k in group)
        triples.append(OrthogonalTriple(vecs, tuple(simplify(ip(v, v)) for v in vecs)))
    if len(triples) != 5:
        raise ValueError(f"expected 5 triples, found {len(triples)}")
    for t in triples:
        for v in ico.vertices():
            if all(simplify(ip(v, e)) != 0 for e in t.vectors):
                raise ValueError("a vertex misses all three planes of a triple")
    return triples


def triple_permutation(g: Sequence[Sequence], triples: Sequence[OrthogonalTriple] | None = None) -> tuple[int, ...]:
    """The permutation ``k -> pi(k)`` with ``g(triple_k) = triple_pi(k)``."""
    triples = triples or orthogonal_triples()
    perm = []
    for t in triples:
        image = [apply(g, v) for v in t.vectors]
        hits = [k for k, u in enumerate(triples) if all(u.contains_axis(w) for w in image)]
        if len(hits) != 1:
            raise ValueError("rotation does not permute the triples")
        perm.append(hits[0])
    return tuple(perm)


def cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    seen = set()
    lengths = []
    for start in range(len(perm)):
        if start in seen:
            continue
        n = 0
        k = start
        while k not in seen:
            seen.add(k)
            k = perm[k]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def is_even(perm: Sequence[int]) -> bool:
    return sum(c - 1 for c in cycle_type(perm)) % 2 == 0


# -- the products P_k ------------------------------------------------------------


def _raw_products(triples: Sequence[OrthogonalTriple]) -> list[MultiPoly]:
    out = []
    for t in triples:
        p = linear(t.vectors[0]) * linear(t.vectors[1]) * linear(t.vectors[2])
        out.append(p.map_coefficients(simplify))
    return out


@lru_cache(maxsize=None)
def _scaled_products() -> tuple[tuple[MultiPoly, ...], tuple]:
    triples = orthogonal_triples()
    raw = _raw_products(triples)
    kern = kernel_basis(transpose(coefficient_matrix(raw)))
    if len(kern) != 1:
        raise ValueError(f"relation space among the P_k has dimension {len(kern)}")
    rel = kern[0]
    if any(c == 0 for c in rel):
        raise ValueError("a product is missing from the linear relation")
    first = rel[0]
    scales = tuple(simplify(c / first) if not isinstance(first, int) else simplify(Fraction(1, first) * c) for c in rel)
    scaled = tuple((s * p).map_coefficients(simplify) for s, p in zip(scales, raw))
    return scaled, scales


def triple_products() -> tuple[HarmonicForm, ...]:
    """The five cubics ``P_k``, rescaled once so that ``P_1 + ... + P_5 = 0``."""
    return tuple(HarmonicForm(p, 3) for p in _scaled_products()[0])


def product_scales() -> tuple:
    """The exact constants ``c_k`` with ``P_k = c_k (e1,x)(e2,x)(e3,x)``; ``c_1 = 1``."""
    return _scaled_products()[1]


@dataclass(frozen=True)
class ClebschPoint:
    y: tuple

    def __post_init__(self):
        if len(self.y) != 5:
            raise ValueError("a Clebsch point has five coordinates")

    def sigma(self, k: int):
        """Elementary symmetric function of the coordinates."""
        return elementary_symmetric(self.y, k)

    def power_sum(self, k: int):
        total = 0
        for v in self.y:
            total = total + v ** k
        return simplify(total) if not isinstance(total, MultiPoly) else total


def elementary_symmetric(values: Sequence, k: int):
    total = 0
    for combo in combinations(values, k):
        term = 1
        for v in combo:
            term = term * v
        total = total + term
    return total


def clebsch_embedding(b: Sequence) -> ClebschPoint:
    """``y_k = P_k(b)``; all five vanish exactly when ``[b]`` is an axis."""
    return ClebschPoint(tuple(_simplify_any(p.poly.evaluate(list(b))) for p in triple_products()))


def clebsch_polynomials(point) -> ClebschPoint:
    """``y_k`` as polynomials after substituting a polynomial point (e.g. the null conic)."""
    return ClebschPoint(tuple(p.poly.substitute(list(point)) for p in triple_products()))


def _simplify_any(x):
    try:
        return simplify(x)
    except Exception:
        return x


# -- projection onto the complement of U0 --------------------------------------------


@lru_cache(maxsize=None)
def _complement_data():
    products = triple_products()
    basis = [p.poly for p in products[:4]]
    if rank(coefficient_matrix(basis)) != 4:
        raise ValueError("P_1..P_4 are not independent")
    gram = [[simplify(bombieri_pairing(u, v)) for v in basis] for u in basis]
    return tuple(basis), inverse(gram)


def project_onto_complement(b: Sequence) -> HarmonicForm:
    """``p_b``: the component of ``f_b`` in ``U0^perp`` along ``U0``.

    Since ``(f_b, Q) = Q(b)`` for harmonic ``Q``, the coordinates in the basis
    ``P_1..P_4`` solve ``Gram * alpha = (P_j(b))``.
    """
    basis, ginv = _complement_data()
    b = list(b)
    numeric = [x for x in b if not is_exact(x)]
    if numeric:
        ctx = getattr(numeric[0], "context", mpmath.mp)
        basis = tuple(q.map_coefficients(lambda c: to_mpc(c, ctx)) for q in basis)
        ginv = [[to_mpc(c, ctx) for c in row] for row in ginv]
        b = [to_mpc(x, ctx) for x in b]
    rhs = [_simplify_any(q.evaluate(b)) for q in basis]
    alpha = matvec(ginv, rhs)
    out = MultiPoly(VARS)
    for a, q in zip(alpha, basis):
        if a != 0:
            out = out + a * q
    return HarmonicForm(out.map_coefficients(_simplify_any), 3)


def complement_check() -> dict:
    """``span{P_k}`` against the isotropic span: dimensions and mutual pairings."""
    u0 = isotropic_span(standard_icosahedron())
    products = triple_products()
    pairings = [simplify(bombieri_pairing(p, u)) for p in products for u in u0.basis]
    return {
        "span_dim": rank(coefficient_matrix(products)),
        "u0_dim": len(u0.basis),
        "pairings_zero": all(x == 0 for x in pairings),
        "total_dim": rank(coefficient_matrix(list(products) + list(u0.basis))),
    }


# -- the decagic curve ----------------------------------------------------------------


def _cyclic(f):
    x1, x2, x3 = (MultiPoly.var(v, VARS) for v in VARS)
    return f(x1, x2, x3) + f(x2, x3, x1) + f(x3, x1, x2)


def decagic_polynomial_literal(sqrt5=SQRT5) -> MultiPoly:
    """The degree-10 invariant curve exactly as usually printed.

    That form is invariant for the icosahedron with axes ``(1, 0, phi)`` etc.,
    i.e. the standard one with ``x1`` and ``x2`` swapped.
    """
    x1, x2, x3 = (MultiPoly.var(v, VARS) for v in VARS)
    d = 2 * (x1 ** 10 + x2 ** 10 + x3 ** 10)
    d = d + 35 * _cyclic(lambda a, b, c: a ** 8 * b ** 2 + a ** 2 * b ** 8)
    d = d + 25 * sqrt5 * _cyclic(lambda a, b, c: a ** 2 * b ** 8 - a ** 8 * b ** 2)
    d = d - 30 * _cyclic(lambda a, b, c: a ** 6 * b ** 4 + a ** 4 * b ** 6)
    d = d + 50 * sqrt5 * _cyclic(lambda a, b, c: a ** 6 * b ** 4 - a ** 4 * b ** 6)
    s = x1 * x1 * x2 * x2 * x3 * x3
    d = d - 560 * s * (x1 ** 4 + x2 ** 4 + x3 ** 4)
    d = d + 1060 * s * (x1 ** 2 * x2 ** 2 + x2 ** 2 * x3 ** 2 + x3 ** 2 * x1 ** 2)
    return d.map_coefficients(simplify)


@lru_cache(maxsize=None)
def decagic_polynomial() -> MultiPoly:
    """The decagic adapted to :func:`standard_icosahedron` (swap ``x1``, ``x2`` in the literal form)."""
    x1, x2, x3 = (MultiPoly.var(v, VARS) for v in VARS)
    return decagic_polynomial_literal().substitute([x2, x1, x3]).map_coefficients(simplify)


def decagic_invariant() -> bool:
    d = decagic_polynomial()
    return all(rotate_form(d, g).map_coefficients(simplify) == d for g in icosahedral_generators())


def vanishing_order_at(p: MultiPoly, point: Sequence, max_order: int = 6) -> int:
    """Largest ``m`` with every partial derivative of order ``< m`` vanishing at ``point``."""
    for m in range(max_order + 1):
        for orders in monomials(len(p.variables), m):
            if _simplify_any(p.derivative(orders).evaluate(list(point))) != 0:
                return m
    return max_order + 1


def sample_decagic_points(count: int, seed: int = 0, precision: int = 128) -> list[tuple]:
    """Points of the decagic: intersect with random rational lines and take numeric roots.

    Each line ``t -> p + t q`` restricts the curve to a degree-10 polynomial in ``t``.
    """
    import random

    from .exact_core.roots import complex_roots

    rng = random.Random(seed)
    d = decagic_polynomial()
    out: list[tuple] = []
    while len(out) < count:
        p = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)]
        q = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)]
        tvar = MultiPoly.var("t", ("t",))
        line = [MultiPoly.constant(a, ("t",)) + b * tvar for a, b in zip(p, q)]
        restricted = d.substitute(line)
        deg = restricted.degree()
        if deg != 10:
            continue
        coeffs = [restricted.coefficient((10 - k,)) for k in range(11)]
        report = complex_roots(coeffs, precision)
        ctx = mpmath.MPContext()
        ctx.prec = report.working_precision
        for r in report.roots:
            if r.multiplicity != 1:
                continue
            pt = tuple(ctx.mpf(a.numerator) / a.denominator + r.value * (ctx.mpf(b.numerator) / b.denominator) for a, b in zip(p, q))
            out.append(pt)
            if len(out) == count:
                break
    return out


# -- the quartic through R and R~ ----------------------------------------------------------


@dataclass(frozen=True)
class QuarticReport:
    identity_holds: bool
    sigma2: MultiPoly
    sigma4: MultiPoly
    control_sigma2: object  # sigma_2 at a non-null rational point


def quartic_R_check() -> QuarticReport:
    """``9 sigma_2^2 - 20 sigma_4`` vanishes identically on the image of the null conic."""
    y = clebsch_polynomials(null_param())
    s2 = elementary_symmetric(y.y, 2)
    s4 = elementary_symmetric(y.y, 4)
    q = (9 * s2 * s2 - 20 * s4).map_coefficients(simplify)
    control = simplify(clebsch_embedding((1, 2, 3)).sigma(2))
    return QuarticReport(q.is_zero(), s2, s4, control)


def quartic_value(y: Sequence):
    s2 = elementary_symmetric(y, 2)
    s4 = elementary_symmetric(y, 4)
    return 9 * s2 * s2 - 20 * s4


# -- Picard lattice of the blown-up plane --------------------------------------------------------


@dataclass(frozen=True)
class PicardClass:
    """``h H - sum e_i E_i`` stored as ``(h; e_1..e_6)`` coefficients of ``H, E_1..E_6``."""

    h: int
    e: tuple[int, ...] = (0, 0, 0, 0, 0, 0)

    def __post_init__(self):
        if len(self.e) != 6:
            raise ValueError("six exceptional classes")
        object.__setattr__(self, "e", tuple(int(x) for x in self.e))

    def __add__(self, other: PicardClass) -> PicardClass:
        return PicardClass(self.h + other.h, tuple(a + b for a, b in zip(self.e, other.e)))

    def __sub__(self, other: PicardClass) -> PicardClass:
        return PicardClass(self.h - other.h, tuple(a - b for a, b in zip(self.e, other.e)))

    def __neg__(self) -> PicardClass:
        return PicardClass(-self.h, tuple(-a for a in self.e))

    def __rmul__(self, k: int) -> PicardClass:
        return PicardClass(k * self.h, tuple(k * a for a in self.e))

    def __str__(self) -> str:
        parts = [f"{self.h}H"]
        for i, c in enumerate(self.e, 1):
            if c:
                parts.append(f"{c:+d}E{i}")
        return " ".join(parts)


def picard_intersect(a: PicardClass, b: PicardClass) -> int:
    """Signature (1, 6) form: ``H.H = 1``, ``E_i.E_i = -1``, all others 0."""
    return a.h * b.h - sum(x * y for x, y in zip(a.e, b.e))


def _E(i: int) -> PicardClass:
    e = [0] * 6
    e[i] = 1
    return PicardClass(0, tuple(e))


def known_classes() -> dict[str, PicardClass]:
    H = PicardClass(1)
    E = [_E(i) for i in range(6)]
    sum_e = PicardClass(0, (1,) * 6)
    minus_k = 3 * H - sum_e
    table = {"H": H, "K_S": -minus_k, "-K_S": minus_k}
    for i in range(6):
        table[f"E{i + 1}"] = E[i]
        table[f"E~{i + 1}"] = 2 * H - sum_e + E[i]
    table["H~"] = 5 * H - 2 * sum_e
    table["R"] = 2 * H
    table["R~"] = 10 * H - 4 * sum_e
    table["T|S"] = 10 * minus_k
    return table


def picard_identities() -> dict[str, bool]:
    t = known_classes()
    sum_et = PicardClass(0)
    for i in range(6):
        sum_et = sum_et + t[f"E~{i + 1}"]
    sum_e = PicardClass(0, (1,) * 6)
    return {
        "R+R~=-4K": t["R"] + t["R~"] == 4 * t["-K_S"],
        "-K=3H~-sumE~": 3 * t["H~"] - sum_et == t["-K_S"],
        "R~=2H~": t["R~"] == 2 * t["H~"],
        "T=3R~+2sumE": t["T|S"] == 3 * t["R~"] + 2 * sum_e,
        "E~ exceptional": all(
            picard_intersect(t[f"E~{i + 1}"], t[f"E~{i + 1}"]) == -1
            and picard_intersect(t[f"E~{i + 1}"], t["-K_S"]) == 1
            for i in range(6)
        ),
    }


def developable_degree(genus: int, degree: int) -> int:
    """Degree ``2g - 2 + 2n`` of the tangent developable of a curve of genus ``g`` and degree ``n``."""
    if degree < 1 or genus < 0:
        raise ValueError("need degree >= 1 and genus >= 0")
    return 2 * genus - 2 + 2 * degree
