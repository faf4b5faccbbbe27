from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from icosa.clebsch_geometry import project_onto_complement
from icosa.exact_core.linalg import det, identity, matmul, transpose
from icosa.exact_core.scalars import I, to_complex
from icosa.icosa_solver import (
    EQUATION_AXES,
    ChartSingularityError,
    GroupParam,
    SolveConfig,
    canonical_key,
    find_icosahedral_sets,
    generate_cubic_through,
    projective_distance,
    random_rational_param,
    residual_system,
    rotation_from_cayley,
    set_distance,
    summarize,
)
from icosa.so3_rep import (
    BinaryForm2d,
    apply,
    bombieri_pairing,
    icosahedral_group,
    project_fa,
    sextic_to_cubic,
    standard_icosahedron,
)

from conftest import small_fracs

AXES = standard_icosahedron().axes


def _np(m):
    return np.array([[to_complex(x) for x in row] for row in m], dtype=complex)


# -- Cayley chart -------------------------------------------------------------------------


def test_cayley_identity():
    assert rotation_from_cayley((0, 0, 0)) == identity(3)


def test_cayley_unit_parameter_is_exact_rotation():
    g = rotation_from_cayley((1, 0, 0))
    assert matmul(transpose(g), g) == identity(3)
    assert det(g) == 1
    # a quarter turn about e1
    assert g == [[1, 0, 0], [0, 0, -1], [0, 1, 0]]


@given(st.tuples(small_fracs, small_fracs, small_fracs))
def test_cayley_rational_is_orthogonal(s):
    g = rotation_from_cayley(s)
    assert matmul(transpose(g), g) == identity(3)
    assert det(g) == 1


def test_cayley_numeric_is_orthogonal():
    gen = np.random.default_rng(5)
    for _ in range(20):
        s = gen.normal(size=3) + 1j * gen.normal(size=3)
        g = np.array(rotation_from_cayley(tuple(s)))
        assert np.linalg.norm(g.T @ g - np.eye(3)) < 1e-12
        assert abs(np.linalg.det(g) - 1) < 1e-12


def test_cayley_chart_boundary():
    with pytest.raises(ChartSingularityError):
        rotation_from_cayley((I, 0, 0))


def test_group_param_needs_three_components():
    with pytest.raises(ValueError):
        GroupParam((1, 2))


# -- residual system ----------------------------------------------------------------------


def test_residual_at_identity_matches_pairings():
    # independent route: Bombieri pairing against the reproducing kernel f_a
    rng = random.Random(3)
    for _ in range(3):
        f = sextic_to_cubic(BinaryForm2d([rng.randint(-4, 4) for _ in range(7)]))
        got = residual_system(f, (0, 0, 0))
        want = tuple(bombieri_pairing(f, project_fa(AXES[i])) for i in EQUATION_AXES)
        assert got == want


def test_residual_exact_for_rational_parameter():
    gen = generate_cubic_through(GroupParam((Fraction(1, 2), Fraction(-1, 3), 2)), seed=4)
    assert residual_system(gen.f, (Fraction(1, 2), Fraction(-1, 3), 2)) == (0, 0, 0)


def test_residual_negative_control():
    gen = generate_cubic_through(None, seed=1)
    vals = residual_system(gen.f, (Fraction(1, 3), 0, Fraction(1, 5)))
    assert any(v != 0 for v in vals)


def test_residual_clears_denominators():
    f = sextic_to_cubic(BinaryForm2d([1, 0, 0, 0, 0, 0, -1]))
    s = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4))
    den = 1 + sum(x * x for x in s)
    g = rotation_from_cayley(s)
    want = tuple(f(apply(g, AXES[i])) * den**3 for i in EQUATION_AXES)
    assert residual_system(f, s) == want


# -- forward generation ---------------------------------------------------------------------


@pytest.mark.parametrize("seed", range(4))
def test_generated_cubic_vanishes_on_axes(seed):
    param = random_rational_param(random.Random(seed))
    gen = generate_cubic_through(param, seed=seed)
    assert len(gen.kernel) == 4
    assert all(gen.f(a) == 0 for a in gen.axes)
    assert not gen.f.is_zero()


def test_generate_is_deterministic():
    a = generate_cubic_through(None, seed=7)
    b = generate_cubic_through(None, seed=7)
    assert a.f.poly == b.f.poly


# -- distances and keys -------------------------------------------------------------------


def test_projective_distance_scale_invariant():
    u = (1, 2j, 3)
    assert projective_distance(u, tuple(2.5j * x for x in u)) < 1e-15
    assert abs(projective_distance((1, 0, 0), (0, 1, 0)) - 1) < 1e-15


def test_canonical_key_ignores_order_and_scale():
    axes = [tuple(to_complex(x) for x in a) for a in AXES]
    shuffled = [tuple(-3j * x for x in a) for a in reversed(axes)]
    assert canonical_key(axes) == canonical_key(shuffled)


# -- solving --------------------------------------------------------------------------------


@pytest.fixture(scope="module")
def forward_solutions():
    gen = generate_cubic_through(GroupParam((Fraction(2, 3), Fraction(-1, 2), Fraction(1, 4))), seed=11)
    return gen, find_icosahedral_sets(gen.f, SolveConfig(seed=2))


def test_forward_cubic_two_classes(forward_solutions):
    gen, sols = forward_solutions
    assert len(sols) == 2
    assert min(set_distance(s.axes, gen.axes) for s in sols) < 1e-8
    assert all(s.residual < 1e-10 for s in sols)


def test_solutions_lie_on_the_cubic(forward_solutions):
    gen, sols = forward_solutions
    for sol in sols:
        g = _np(sol.g)
        assert np.linalg.norm(g.T @ g - np.eye(3)) < 1e-10
        for a in sol.axes:
            assert abs(complex(gen.f.poly.map_coefficients(to_complex).evaluate(list(a)))) < 1e-9


def test_stabilizer_leaves_key_fixed(forward_solutions):
    _, sols = forward_solutions
    sol = sols[0]
    g = _np(sol.g)
    a_all = np.array([[to_complex(x) for x in a] for a in AXES])
    for h in icosahedral_group():
        gh = g @ _np(h)
        axes = [tuple(v) for v in (a_all @ gh.T)]
        assert set_distance(axes, sol.axes) < 1e-10
        assert canonical_key(axes, digits=6) == canonical_key(sol.axes, digits=6)


def test_solver_deterministic():
    gen = generate_cubic_through(None, seed=3)
    cfg = SolveConfig(starts=80, seed=9)
    first = [s.canonical_key for s in find_icosahedral_sets(gen.f, cfg)]
    second = [s.canonical_key for s in find_icosahedral_sets(gen.f, cfg)]
    assert first == second and first


def test_clebsch_locus_exactly_one():
    f = project_onto_complement([Fraction(1), Fraction(2), Fraction(3)])
    sols = find_icosahedral_sets(f, SolveConfig())
    assert len(sols) == 1
    assert summarize(f, sols).observed == "ExactlyOne"


@pytest.mark.slow
def test_tritangent_family_signature():
    # z1^2 z2^2 (z1 - z2)^2: a square with J6 = 0, a positive-dimensional family
    f = sextic_to_cubic(BinaryForm2d([0, 0, 1, -2, 1, 0, 0]))
    summary = summarize(f, find_icosahedral_sets(f, SolveConfig()), "InfinitelyMany")
    assert summary.infinitely_many_signature
    assert summary.observed == "InfinitelyMany"


def test_config_validation():
    with pytest.raises(ValueError):
        SolveConfig(starts=0)
    with pytest.raises(ValueError):
        SolveConfig(tol=0)


def test_rejects_non_cubic_and_zero():
    f = project_fa((1, 0, 0))
    with pytest.raises(ValueError):
        find_icosahedral_sets(0 * f)
