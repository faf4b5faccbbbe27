from __future__ import annotations

import itertools
import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from icosa.clebsch_geometry import (
    PicardClass,
    clebsch_embedding,
    complement_check,
    cycle_type,
    decagic_polynomial,
    decagic_polynomial_literal,
    developable_degree,
    is_even,
    known_classes,
    orthogonal_triples,
    picard_identities,
    picard_intersect,
    product_scales,
    project_onto_complement,
    quartic_R_check,
    quartic_value,
    sample_decagic_points,
    triple_permutation,
    triple_products,
    twofold_axes,
    vanishing_order_at,
)
from icosa.exact_core.linalg import matmul, matvec
from icosa.exact_core.scalars import simplify, to_mpc
from icosa.sextic_invariants import j6_is_zero, root_profile
from icosa.so3_rep import (
    bombieri_pairing,
    cross,
    cubic_to_sextic,
    icosahedral_generators,
    icosahedral_group,
    ip,
    isotropic_span,
    laplacian,
    null_param,
    project_fa,
    rotate_form,
    standard_icosahedron,
)

from conftest import small_fracs

AXES = standard_icosahedron().axes
GROUP = icosahedral_group()
nonzero_vec = st.tuples(small_fracs, small_fracs, small_fracs).filter(lambda v: any(v))


def _parallel(u, v):
    return all(simplify(c) == 0 for c in cross(u, v))


# -- triples --------------------------------------------------------------------------------


def test_fifteen_twofold_axes_match_involutions():
    # independent route: the fixed axis of each half-turn, as a column of g + I
    axes = twofold_axes(standard_icosahedron())
    assert len(axes) == 15
    involutions = [g for g in GROUP if matmul(g, g) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]] and g != [[1, 0, 0], [0, 1, 0], [0, 0, 1]]]
    assert len(involutions) == 15
    for g in involutions:
        cols = [[simplify(g[i][j] + (1 if i == j else 0)) for i in range(3)] for j in range(3)]
        fixed = next(c for c in cols if any(x != 0 for x in c))
        assert sum(_parallel(fixed, a) for a in axes) == 1


def test_five_triples_partition_the_axes():
    triples = orthogonal_triples()
    assert len(triples) == 5
    flat = [v for t in triples for v in t.vectors]
    assert len(flat) == 15
    for u, v in itertools.combinations(flat, 2):
        assert not _parallel(u, v)


def test_permutation_is_a_homomorphism_onto_a5():
    perms = {}
    for g in GROUP:
        perms[tuple(map(tuple, g))] = triple_permutation(g)
    assert len(set(perms.values())) == 60
    assert all(is_even(p) for p in perms.values())
    rng = random.Random(0)
    for _ in range(30):
        g, h = rng.choice(GROUP), rng.choice(GROUP)
        pg, ph = perms[tuple(map(tuple, g))], perms[tuple(map(tuple, h))]
        pgh = perms[tuple(map(tuple, matmul(g, h)))]
        assert pgh == tuple(pg[ph[k]] for k in range(5))


def test_cycle_types_of_a5():
    counts = Counter(cycle_type(triple_permutation(g)) for g in GROUP)
    assert counts == {(1, 1, 1, 1, 1): 1, (2, 2, 1): 15, (3, 1, 1): 20, (5,): 24}


def test_cycle_type_and_parity_helpers():
    assert cycle_type((1, 0, 2, 3, 4)) == (2, 1, 1, 1)
    assert not is_even((1, 0, 2, 3, 4))
    assert is_even((1, 2, 0, 3, 4))


# -- the products P_k -------------------------------------------------------------------------


def test_products_harmonic_and_vanish_on_axes():
    for p in triple_products():
        assert laplacian(p.poly).is_zero()
        assert all(simplify(p(a)) == 0 for a in AXES)


def test_product_scales_are_signs():
    scales = product_scales()
    assert scales[0] == 1
    assert sorted(scales) == [-1, -1, 1, 1, 1]


def test_complement_of_isotropic_span():
    rep = complement_check()
    assert rep == {"span_dim": 4, "u0_dim": 3, "pairings_zero": True, "total_dim": 7}


@settings(max_examples=15)
@given(nonzero_vec)
def test_diagonal_cubic_surface(b):
    # the image lies on sum y = sum y^3 = 0
    y = clebsch_embedding(b)
    assert simplify(y.power_sum(1)) == 0
    assert simplify(y.power_sum(3)) == 0


@settings(max_examples=10)
@given(nonzero_vec)
def test_embedding_equivariance(b):
    y = clebsch_embedding(b).y
    for g in icosahedral_generators():
        perm = triple_permutation(g)
        yg = clebsch_embedding(matvec(g, list(b))).y
        assert all(yg[perm[k]] == y[k] for k in range(5))


def test_embedding_equivariance_full_group():
    b = (Fraction(1, 3), Fraction(-2), Fraction(5, 7))
    y = clebsch_embedding(b).y
    for g in GROUP:
        perm = triple_permutation(g)
        yg = clebsch_embedding(matvec(g, list(b))).y
        assert all(yg[perm[k]] == y[k] for k in range(5))


def test_embedding_base_locus_is_the_axes():
    for a in AXES:
        assert all(v == 0 for v in clebsch_embedding(a).y)
    assert any(v != 0 for v in clebsch_embedding((1, 0, 0)).y)


# -- projection p_b ---------------------------------------------------------------------------


@settings(max_examples=8)
@given(nonzero_vec)
def test_projection_is_orthogonal_split(b):
    pb = project_onto_complement(b)
    u0 = isotropic_span(standard_icosahedron()).basis
    assert all(simplify(bombieri_pairing(pb, u)) == 0 for u in u0)
    rest = project_fa(b) - pb
    assert all(simplify(bombieri_pairing(rest, p)) == 0 for p in triple_products())


@settings(max_examples=6)
@given(nonzero_vec)
def test_j6_vanishes_on_projection(b):
    if all(v == 0 for v in clebsch_embedding(b).y):
        return
    assert j6_is_zero(cubic_to_sextic(project_onto_complement(b)))


# -- decagic ----------------------------------------------------------------------------------


def test_decagic_invariance_and_orientation():
    d = decagic_polynomial()
    for g in icosahedral_generators():
        assert rotate_form(d, g).map_coefficients(simplify) == d
    lit = decagic_polynomial_literal()
    assert any(rotate_form(lit, g).map_coefficients(simplify) != lit for g in icosahedral_generators())


def test_decagic_order_four_at_axes():
    d = decagic_polynomial()
    assert [vanishing_order_at(d, a) for a in AXES] == [4] * 6
    assert vanishing_order_at(d, (1, 0, 0)) == 0


def test_decagic_points_give_three_double_roots():
    d = decagic_polynomial()
    for pt in sample_decagic_points(2, seed=5):
        ctx = pt[0].context
        val = d.map_coefficients(lambda c: to_mpc(c, ctx)).evaluate(list(pt))
        assert abs(val) < ctx.mpf(10) ** -20 * max(abs(x) for x in pt) ** 10
        assert root_profile(cubic_to_sextic(project_onto_complement(pt))).partition == (2, 2, 2)


# -- quartic through the image of the null conic -----------------------------------------------


def test_quartic_vanishes_on_null_conic_image():
    rep = quartic_R_check()
    assert rep.identity_holds
    assert rep.control_sigma2 != 0


@pytest.mark.parametrize("z", [(1, 2), (Fraction(3, 2), -1), (0, 1), (5, Fraction(1, 3))])
def test_quartic_pointwise_on_null_points(z):
    # independent route: evaluate y at concrete isotropic vectors
    v = null_param(*z)
    assert simplify(ip(v, v)) == 0
    assert simplify(quartic_value(clebsch_embedding(v).y)) == 0


def test_quartic_nonzero_off_conic():
    assert simplify(quartic_value(clebsch_embedding((1, 2, 3)).y)) != 0


# -- Picard lattice -------------------------------------------------------------------------------


def test_picard_identities():
    assert all(picard_identities().values())


def test_picard_intersections():
    t = known_classes()
    assert picard_intersect(t["K_S"], t["K_S"]) == 3
    assert picard_intersect(t["R~"], t["R~"]) == 4
    assert picard_intersect(t["R"], t["R"]) == 4
    for i, j in itertools.combinations(range(1, 7), 2):
        assert picard_intersect(t[f"E~{i}"], t[f"E~{j}"]) == 0
        assert picard_intersect(t[f"E{i}"], t[f"E~{j}"]) == 1


def test_picard_class_arithmetic():
    a = PicardClass(2, (1, 0, 0, 0, 0, 1))
    assert a - a == PicardClass(0)
    assert 3 * a == a + a + a
    assert str(PicardClass(1, (0, -1, 0, 0, 0, 0))) == "1H -1E2"
    with pytest.raises(ValueError):
        PicardClass(1, (1, 2))


def test_developable_degree():
    assert developable_degree(0, 6) == 10
    assert developable_degree(1, 3) == 6
    with pytest.raises(ValueError):
        developable_degree(0, 0)
