from __future__ import annotations

import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from icosa.exact_core.linalg import det
from icosa.exact_core.scalars import simplify, to_mpc
from icosa.exact_core.poly import MultiPoly
from icosa.pfaffian_curve import (
    DegenerateCurveError,
    GradedClass,
    mu_cohomology_constants,
    numeric_form,
    pfaffian_curve,
    proportionality_check,
    skew_net,
)
from icosa.so3_rep import VARS, HarmonicForm, rational_harmonic_basis

from conftest import rand_frac


def _random_harmonic(d, rng):
    poly = MultiPoly(VARS)
    for b in rational_harmonic_basis(d):
        poly = poly + rand_frac(rng) * b
    return HarmonicForm(poly, d)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_exact_pfaffian_is_proportional(d):
    rng = random.Random(d)
    for _ in range(3 if d < 4 else 1):
        rep = proportionality_check(_random_harmonic(d, rng))
        assert rep.exact and rep.deviation == 0 and rep.ratio != 0
        assert rep.pfaffian.is_homogeneous(d)


@given(st.integers(0, 10_000))
def test_pfaffian_squared_is_determinant(seed):
    # independent route: Pf^2 = det of the net at a rational point
    rng = random.Random(seed)
    f = _random_harmonic(2, rng)
    net = skew_net(f)
    pf = pfaffian_curve(net).poly
    x = [rand_frac(rng) for _ in range(3)]
    n = len(net.w_basis)
    m = [[sum((xk * om[i, j] for xk, om in zip(x, net.omegas)), 0) for j in range(n)] for i in range(n)]
    assert simplify(det(m)) == simplify(pf.evaluate(x) ** 2)


def test_net_matrices_are_skew_and_w_is_orthogonal():
    from icosa.so3_rep import bombieri_pairing

    f = _random_harmonic(3, random.Random(7))
    net = skew_net(f)
    assert len(net.w_basis) == 6
    assert all(bombieri_pairing(f.poly, w) == 0 for w in net.w_basis)
    for om in net.omegas:
        assert om.transpose_sum_is_zero()


def test_ratio_scales_inversely():
    f = _random_harmonic(3, random.Random(3))
    lam = proportionality_check(f).ratio
    assert proportionality_check(Fraction(3) * f).ratio == simplify(lam / 3)


def test_numeric_path():
    ctx = mpmath.MPContext()
    ctx.prec = 128
    f = _random_harmonic(3, random.Random(11))
    rep = proportionality_check(numeric_form(f, ctx))
    assert not rep.exact
    assert rep.proportional and rep.deviation < 1e-9


def test_numeric_ratio_scaling():
    ctx = mpmath.MPContext()
    ctx.prec = 128
    f = numeric_form(_random_harmonic(2, random.Random(2)), ctx)
    lam = to_mpc(proportionality_check(f).ratio, ctx)
    lam2 = to_mpc(proportionality_check(HarmonicForm(f.poly.map_coefficients(lambda c: 2 * c), 2)).ratio, ctx)
    assert abs(lam2 - lam / 2) < 1e-25 * abs(lam)


def test_degree_limits():
    with pytest.raises(ValueError):
        proportionality_check(_random_harmonic(5, random.Random(0)))
    assert issubclass(DegenerateCurveError, ValueError)


def test_mu_constants():
    mu = mu_cohomology_constants()
    assert mu.c3_dual == 2
    assert mu.c3_dual == Fraction(4 + 88 - 72, 10)
    assert mu.k_roots == (-1, 11)
    assert mu.k_selected == -1
    assert mu.passed
    for k in mu.k_roots:
        assert 2 * k * (k - 10) == 22


def test_graded_ring_relation():
    x = GradedClass(x=1)
    y = GradedClass(y=1)
    assert x * x == 22 * y
    assert (x * y).integrate() == 1
    assert (x * x * x).integrate() == 22
