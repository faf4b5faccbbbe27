"""Verification suites behind ``icosa verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from ..clebsch_geometry import (
    clebsch_embedding,
    complement_check,
    cycle_type,
    decagic_invariant,
    decagic_polynomial,
    developable_degree,
    is_even,
    orthogonal_triples,
    picard_identities,
    project_onto_complement,
    quartic_R_check,
    sample_decagic_points,
    triple_permutation,
    triple_products,
    vanishing_order_at,
)
from ..exact_core.linalg import matvec
from ..exact_core.poly import MultiPoly
from ..exact_core.scalars import simplify, to_mpc
from ..pfaffian_curve import mu_cohomology_constants, proportionality_check
from ..sextic_invariants import discriminant, j6_is_zero, j_invariants, root_profile
from ..so3_rep import (
    BASIS_E,
    VARS,
    HarmonicForm,
    cubic_to_sextic,
    enumerate_isotropic_weight_subsets,
    harmonic_basis,
    icosahedral_generators,
    icosahedral_group,
    ip,
    isotropic_span,
    laplacian,
    omega,
    standard_icosahedron,
)
from ..special_curve import (
    SIX_POINTS,
    ECPoint,
    cayley_table,
    conic_intersection,
    point_order,
    verify_covering_structure,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _check(name: str, ok, detail="") -> Check:
    return Check(name, bool(ok), str(detail))


def weight_families(d: int) -> set[frozenset[int]]:
    top = frozenset(range(1, d + 1))
    zero = frozenset([0, *range(2, d + 1)])
    return {top, frozenset(-w for w in top), zero, frozenset(-w for w in zero)}


# -- suites --------------------------------------------------------------------------


def isotropy_suite() -> Iterator[Check]:
    span = isotropic_span(standard_icosahedron())
    yield _check("isotropic span has dimension 3", len(span.basis) == 3)
    pairings = [omega(x, u, v) for x in BASIS_E for u in span.basis for v in span.basis]
    yield _check("omega_x vanishes on the span for x = e1, e2, e3", all(p == 0 for p in pairings), f"{len(pairings)} pairings")


def pfaffian_suite(count: int = 5, seed: int = 0) -> Iterator[Check]:
    rng = random.Random(seed)
    basis = harmonic_basis(3)
    for k in range(count):
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in basis]
        poly = sum((c * b.poly for c, b in zip(coeffs, basis)), MultiPoly(VARS))
        if poly.is_zero():
            continue
        rep = proportionality_check(HarmonicForm(poly, 3))
        yield _check(f"Pfaffian proportional to f (cubic {k})", rep.proportional and rep.deviation == 0, f"ratio {rep.ratio}")


def invariants_suite(seed: int = 0) -> Iterator[Check]:
    rng = random.Random(seed)
    import mpmath

    ctx = mpmath.MPContext()
    ctx.prec = 128
    worst = ctx.mpf(0)
    done = 0
    while done < 5:
        a, b, c = (Fraction(rng.randint(-20, 20) or 1, rng.randint(1, 9)) for _ in range(3))
        expected = b * b * (b * b - 4 * a * c) ** 2 / 1024
        if expected == 0:
            continue
        # z^2 (a z^2 + b z + c) with double roots at 0 and infinity
        got = to_mpc(j_invariants([0, 0, a, b, c, 0, 0], 128).J6, ctx)
        want = to_mpc(expected, ctx)
        worst = max(worst, abs(got - want) / abs(want))
        done += 1
    yield _check("J6(z^2(az^2+bz+c)) = b^2(b^2-4ac)^2/1024", worst < ctx.mpf(10) ** -20, f"max rel err {ctx.nstr(worst, 3)}")
    yield _check("J6(z^2(z-1)^2) = 0", j6_is_zero([0, 0, 1, -2, 1, 0, 0]))
    yield _check("J6(z^2(z^2-1)) = 0", j6_is_zero([0, 0, 1, 0, -1, 0, 0]))
    yield _check("Delta(z1^6 - z2^6) = 46656", discriminant([1, 0, 0, 0, 0, 0, -1]) == 46656)
    yield _check("Delta(z1^2 z2^4) = 0", discriminant([0, 0, 1, 0, 0, 0, 0]) == 0)
    p = [Fraction(rng.randint(-9, 9)) for _ in range(7)]
    p[0] = p[0] or Fraction(1)
    exact = discriminant(p)
    ctx.prec = 160
    numeric = to_mpc(discriminant(p, method="roots", precision=160), ctx)
    rel = abs(numeric - to_mpc(exact, ctx)) / abs(to_mpc(exact, ctx))
    yield _check("resultant and root-product discriminants agree", rel < ctx.mpf(10) ** -25, f"rel err {ctx.nstr(rel, 3)}")
    prof = root_profile([0, 0, 1, 0, -1, 0, 0])
    yield _check("z^2(z^2-1) has a harmonic double pair", prof.partition == (2, 2, 1, 1) and prof.has_harmonic_double_pair)


def clebsch_suite(samples: int = 3) -> Iterator[Check]:
    triples = orthogonal_triples()
    yield _check("five orthogonal triples", len(triples) == 5)
    yield _check(
        "triples pairwise orthogonal",
        all(simplify(ip(u, v)) == 0 for t in triples for i, u in enumerate(t.vectors) for v in t.vectors[i + 1 :]),
    )
    products = triple_products()
    axes = standard_icosahedron().axes
    yield _check("P_k harmonic", all(laplacian(p.poly).is_zero() for p in products))
    yield _check("P_k vanish at the six axes", all(simplify(p(a)) == 0 for p in products for a in axes))
    total = sum((p.poly for p in products), MultiPoly(VARS))
    cubes = sum((p.poly * p.poly * p.poly for p in products), MultiPoly(VARS))
    yield _check("sum P_k = 0 identically", total.map_coefficients(simplify).is_zero())
    yield _check("sum P_k^3 = 0 identically", cubes.map_coefficients(simplify).is_zero())
    comp = complement_check()
    yield _check(
        "span{P_k} is the complement of U0",
        comp["span_dim"] == 4 and comp["u0_dim"] == 3 and comp["pairings_zero"] and comp["total_dim"] == 7,
        comp,
    )
    types = [cycle_type(triple_permutation(g)) for g in icosahedral_generators()]
    yield _check("generators act by even permutations", all(is_even(triple_permutation(g)) for g in icosahedral_generators()), types)
    b = [Fraction(1), Fraction(2), Fraction(3)]
    y = clebsch_embedding(b).y
    equiv = True
    for g in icosahedral_group():
        perm = triple_permutation(g)
        yg = clebsch_embedding(matvec(g, b)).y
        equiv &= all(yg[perm[k]] == y[k] for k in range(5))
    yield _check("embedding is A5-equivariant", equiv)
    yield _check("embedding vanishes at an axis", all(v == 0 for v in clebsch_embedding(axes[0]).y))
    yield _check("decagic is icosahedrally invariant", decagic_invariant())
    dec = decagic_polynomial()
    orders = [vanishing_order_at(dec, a) for a in axes]
    yield _check("decagic vanishes to order 4 at the axes", orders == [4] * 6, orders)
    profiles = [root_profile(cubic_to_sextic(project_onto_complement(pt))).partition for pt in sample_decagic_points(samples, seed=0)]
    yield _check("decagic points give sextics with three double roots", all(p == (2, 2, 2) for p in profiles), profiles)
    quartic = quartic_R_check()
    yield _check("9 sigma2^2 - 20 sigma4 vanishes on R", quartic.identity_holds)
    yield _check("sigma2 nonzero off the null conic", quartic.control_sigma2 != 0)
    for name, ok in picard_identities().items():
        yield _check(f"Picard: {name}", ok)
    yield _check("developable degree (0, 6) = 10", developable_degree(0, 6) == 10)
    rng = random.Random(1)
    for _ in range(samples):
        pt = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)]
        if all(v == 0 for v in clebsch_embedding(pt).y):
            continue
        yield _check(f"J6 vanishes on p_b for b = {[str(v) for v in pt]}", j6_is_zero(cubic_to_sextic(project_onto_complement(pt))))


def special_curve_suite() -> Iterator[Check]:
    try:
        table = cayley_table(SIX_POINTS)
        closed = True
    except ValueError:
        table, closed = [], False
    yield _check("six points closed under addition", closed)
    orders = [point_order(p) for p in SIX_POINTS]
    yield _check("six points cyclic of order 6", closed and 6 in orders and len(table) == 6, orders)
    d = conic_intersection()
    expected = {ECPoint(4, 10): 2, ECPoint(4, -10): 2, ECPoint(-1, 0): 2}
    yield _check("conic meets the curve in 2(4,10) + 2(4,-10) + 2(-1,0)", d.is_rational() and d.points() == expected, d)
    rep = verify_covering_structure()
    yield _check("div(p^2) is even", rep.even, rep.div_p2)
    yield _check("support inside the six rational points", rep.support_in_six)
    yield _check("(5,1) over zero and infinity", rep.zero_profile == (5, 1) and rep.pole_profile == (5, 1))
    yield _check("Riemann-Hurwitz leaves ramification 4", rep.remaining_ramification == 4)


def weights_suite(max_d: int = 6) -> Iterator[Check]:
    for d in range(2, max_d + 1):
        found = set(enumerate_isotropic_weight_subsets(d))
        yield _check(f"weights d={d}: four families", found == weight_families(d), sorted(sorted(s) for s in found))


def mu_suite() -> Iterator[Check]:
    mu = mu_cohomology_constants()
    yield _check("c3(E*) = 2", mu.c3_dual == 2, mu.c3_dual)
    yield _check("22 = 2k(k-10) has roots -1, 11", mu.k_roots == (-1, 11), mu.k_roots)
    yield _check("k = -1", mu.k_selected == -1)


def solver_suite(count: int = 2) -> Iterator[Check]:
    from ..icosa_solver import SolveConfig, find_icosahedral_sets, generate_cubic_through, random_rational_param, set_distance

    rng = random.Random(0)
    for k in range(count):
        gen = generate_cubic_through(random_rational_param(rng), seed=k)
        sols = find_icosahedral_sets(gen.f, SolveConfig(seed=k))
        dist = min((set_distance(s.axes, gen.axes) for s in sols), default=float("inf"))
        yield _check(f"forward cubic {k}: two classes, one is the seed", len(sols) == 2 and dist < 1e-8, f"{len(sols)} classes, {dist:.1e}")


SUITES: dict[str, Callable[..., Iterator[Check]]] = {
    "isotropy": isotropy_suite,
    "pfaffian": pfaffian_suite,
    "invariants": invariants_suite,
    "clebsch": clebsch_suite,
    "special-curve": special_curve_suite,
    "weights": weights_suite,
    "mu-constants": mu_suite,
    "solver": solver_suite,
}
