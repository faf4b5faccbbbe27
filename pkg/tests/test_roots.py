from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from icosa.exact_core.roots import complex_roots


def _poly_from_roots(roots):
    p = [Fraction(1)]
    for r in roots:
        p = [a - r * b for a, b in zip(p + [0], [0] + p)]
    return p


def test_roots_of_unity():
    rep = complex_roots([1, 0, 0, 0, 0, 0, -1], 128)
    ctx = mpmath.MPContext()
    ctx.prec = 128
    assert len(rep.flat()) == 6
    for r in rep.flat():
        assert abs(r**6 - 1) < ctx.mpf(2) ** -100


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=6, unique=True))
def test_integer_roots_recovered(roots):
    rep = complex_roots(_poly_from_roots(roots), 128)
    got = sorted(round(float(r.real)) for r in rep.flat())
    assert got == sorted(roots)
    assert all(r.multiplicity == 1 for r in rep.roots)


def test_multiplicities_are_clustered():
    rep = complex_roots(_poly_from_roots([2, 2, 2, -1, -1, 5]), 128)
    mults = sorted((r.multiplicity for r in rep.roots), reverse=True)
    assert mults == [3, 2, 1]


def test_exact_zero_roots():
    rep = complex_roots([1, -3, 0, 0], 128)
    assert sorted(r.multiplicity for r in rep.roots) == [1, 2]


def test_constant_rejected():
    with pytest.raises(ValueError):
        complex_roots([5], 64)
