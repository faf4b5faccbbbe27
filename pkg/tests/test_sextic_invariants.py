from __future__ import annotations

import itertools
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from icosa.exact_core.scalars import to_mpc
from icosa.icosa_solver import generate_cubic_through, random_rational_param
from icosa.sextic_invariants import (
    ClassificationFlags,
    Verdict,
    c_configurations_60,
    classify_bundle,
    cross_ratio,
    decide_verdict,
    discriminant,
    discriminant_normalizer,
    igusa_ABC,
    j6_is_zero,
    j_invariants,
    matchings_15,
    projective_roots,
    root_profile,
    triple_splits_10,
)
from icosa.so3_rep import cubic_to_sextic, rotate_form, sextic_to_cubic, BinaryForm2d

from conftest import rand_frac


def _ctx(prec=128):
    ctx = mpmath.MPContext()
    ctx.prec = prec
    return ctx


def _rel(a, b, ctx):
    a, b = to_mpc(a, ctx), to_mpc(b, ctx)
    return abs(a - b) / max(abs(b), ctx.mpf(2) ** -300)


def _random_sextic(rng, lead=True):
    p = [rand_frac(rng) for _ in range(7)]
    if lead and p[0] == 0:
        p[0] = Fraction(1)
    return p


# -- counting -----------------------------------------------------------------------


def test_index_set_sizes():
    assert len(matchings_15()) == 15
    assert len(triple_splits_10()) == 10
    assert len(c_configurations_60()) == 60


# -- discriminant -----------------------------------------------------------------


def test_discriminant_normalizer_values():
    assert discriminant_normalizer(6) == -1296
    assert discriminant_normalizer(2) == -1


def test_discriminant_fixtures():
    assert discriminant([1, 0, 0, 0, 0, 0, -1]) == 46656
    assert discriminant([0, 0, 1, 0, 0, 0, 0]) == 0


@given(st.integers(0, 10_000))
def test_discriminant_dual_route(seed):
    rng = random.Random(seed)
    p = _random_sextic(rng)
    ctx = _ctx(160)
    exact = discriminant(p)
    if exact == 0:
        return
    assert _rel(discriminant(p, method="roots", precision=160), exact, ctx) < ctx.mpf(10) ** -25


@given(st.integers(0, 10_000), st.integers(-5, 5).filter(bool))
def test_discriminant_scaling(seed, c):
    p = _random_sextic(random.Random(seed))
    assert discriminant([c * x for x in p]) == c**10 * discriminant(p)


def test_discriminant_zero_on_double_roots():
    rng = random.Random(3)
    for _ in range(5):
        r = [rand_frac(rng) for _ in range(5)]
        roots = r + [r[0]]
        p = [Fraction(1)]
        for x in roots:
            p = [a - x * b for a, b in zip(p + [0], [0] + p)]
        assert discriminant(p) == 0


# -- Igusa sums -------------------------------------------------------------------


def _bracket(a, b):
    return a[0] * b[1] - b[0] * a[1]


def _orbit_sums(pts, lam):
    """Brute force over all 720 orderings; each term is hit |stabilizer| times."""
    sq = [[_bracket(pts[i], pts[j]) ** 2 for j in range(6)] for i in range(6)]
    a = b = c = 0
    for s in itertools.permutations(range(6)):
        q = lambda i, j: sq[s[i]][s[j]]  # noqa: E731
        a += q(0, 1) * q(2, 3) * q(4, 5)
        tri = q(0, 1) * q(1, 2) * q(2, 0) * q(3, 4) * q(4, 5) * q(5, 3)
        b += tri
        c += tri * q(0, 3) * q(1, 4) * q(2, 5)
    return lam**2 * a / 48, lam**4 * b / 72, lam**6 * c / 12


def test_igusa_sums_match_permutation_oracle():
    rng = random.Random(17)
    ctx = _ctx()
    for p in ([1, 0, 0, 0, 0, 0, -1], _random_sextic(rng), [0, 0, 1, 2, 3, 0, 0]):
        roots = projective_roots(p, 128)
        A, B, C = igusa_ABC(p, 128)
        oa, ob, oc = _orbit_sums(roots.points, roots.lam)
        for got, want in ((A, oa), (B, ob), (C, oc)):
            assert abs(got - want) <= ctx.mpf(10) ** -25 * max(1, abs(want))


def test_all_roots_equal():
    A, B, C = igusa_ABC([1, 0, 0, 0, 0, 0, 0], 128)
    assert A == 0 and B == 0 and C == 0


@given(st.integers(0, 10_000))
def test_scaling_covariance(seed):
    rng = random.Random(seed)
    p = _random_sextic(rng)
    c = Fraction(rng.randint(2, 5))
    ctx = _ctx()
    j1 = j_invariants(p).J6
    j2 = j_invariants([c * x for x in p]).J6
    if abs(to_mpc(j1, ctx)) < 1e-30:
        return
    assert _rel(j2, c**6 * to_mpc(j1, ctx), ctx) < ctx.mpf(10) ** -25


# -- J6 ------------------------------------------------------------------------------


@pytest.mark.parametrize("seed", range(10))
def test_j6_on_double_root_family(seed):
    rng = random.Random(100 + seed)
    a, b, c = (Fraction(rng.choice([-1, 1]) * rng.randint(1, 30), rng.randint(1, 9)) for _ in range(3))
    expected = b * b * (b * b - 4 * a * c) ** 2 / 1024
    ctx = _ctx()
    assert _rel(j_invariants([0, 0, a, b, c, 0, 0], 128).J6, expected, ctx) < ctx.mpf(10) ** -20


def test_j6_of_z3_times_z_plus_1():
    ctx = _ctx()
    # z^3 (z + 1): a = 1, b = 1, c = 0
    assert _rel(j_invariants([0, 0, 1, 1, 0, 0, 0]).J6, Fraction(1, 1024), ctx) < ctx.mpf(10) ** -20


def test_j6_zero_normal_forms():
    assert j6_is_zero([0, 0, 1, -2, 1, 0, 0])
    assert j6_is_zero([0, 0, 1, 0, -1, 0, 0])
    assert not j6_is_zero([1, 0, 0, 0, 0, 0, -1])


def test_j6_invariance_under_rotation():
    rng = random.Random(23)
    ctx = _ctx()
    for _ in range(5):
        f = sextic_to_cubic(BinaryForm2d(_random_sextic(rng)))
        g = random_rotation(rng)
        j1 = j_invariants(cubic_to_sextic(f)).J6
        j2 = j_invariants(cubic_to_sextic(rotate_form(f, g))).J6
        assert _rel(j2, j1, ctx) < ctx.mpf(10) ** -20


def random_rotation(rng):
    from icosa.icosa_solver import rotation_from_cayley

    return rotation_from_cayley(random_rational_param(rng))


def test_discriminant_invariance_under_rotation_is_exact():
    rng = random.Random(29)
    for _ in range(3):
        f = sextic_to_cubic(BinaryForm2d(_random_sextic(rng)))
        g = random_rotation(rng)
        assert discriminant(cubic_to_sextic(rotate_form(f, g))) == discriminant(cubic_to_sextic(f))


# -- root profile and verdicts -----------------------------------------------------


def test_root_profiles():
    assert root_profile([0, 0, 1, -2, 1, 0, 0]).partition == (2, 2, 2)
    assert root_profile([0, 0, 1, -2, 1, 0, 0]).is_square_of_cubic
    prof = root_profile([0, 0, 1, 0, -1, 0, 0])
    assert prof.partition == (2, 2, 1, 1) and prof.has_harmonic_double_pair
    assert root_profile([1, 0, 0, 0, 0, 0, -1]).partition == (1,) * 6


def test_non_harmonic_double_pair():
    # z^2 (z - 2)(z - 3) with doubles at 0 and infinity
    prof = root_profile([0, 0, 1, -5, 6, 0, 0])
    assert prof.partition == (2, 2, 1, 1)
    assert not prof.has_harmonic_double_pair


def test_cross_ratio_harmonic_quadruple():
    ctx = _ctx()
    cr = cross_ratio((ctx.mpf(0), 1), (1, 0), (1, 1), (-1, 1))
    assert abs(cr + 1) < 1e-30


@pytest.mark.parametrize(
    "flags, verdict",
    [
        ((False, False, False, False), Verdict.TWO),
        ((True, False, False, False), Verdict.TWO),
        ((True, True, True, False), Verdict.INFINITE),
        ((True, True, False, True), Verdict.INFINITE),
        ((True, True, False, False), Verdict.ONE),
        ((False, True, False, False), Verdict.ONE),
    ],
)
def test_decision_table(flags, verdict):
    assert decide_verdict(ClassificationFlags(*flags)) == verdict
    assert decide_verdict(ClassificationFlags(*flags, null_cone=True, multiple_roots=3)) == verdict


def test_classify_examples():
    tri = classify_bundle([0, 0, 1, -2, 1, 0, 0])
    assert tri.verdict == Verdict.INFINITE and tri.flags.square_of_cubic and tri.flags.j6_zero
    harm = classify_bundle([0, 0, 1, 0, -1, 0, 0])
    assert harm.verdict == Verdict.INFINITE and harm.flags.harmonic_double_pair
    tangent = classify_bundle([0, 0, 1, 1, 0, 0, 0])
    assert tangent.flags.delta_zero and not tangent.flags.j6_zero
    assert tangent.verdict == Verdict.TWO


def test_forward_cubic_is_generic():
    gen = generate_cubic_through(random_rational_param(random.Random(4)), seed=4)
    res = classify_bundle(gen.f)
    assert res.verdict == Verdict.TWO and not res.flags.delta_zero


def test_zero_input_rejected():
    with pytest.raises(ValueError):
        classify_bundle([0] * 7)
