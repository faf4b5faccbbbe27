from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from icosa.exact_core import upoly
from icosa.exact_core.linalg import det, det_expand, identity, inverse, kernel_basis, matmul, matvec, rank, solve
from icosa.exact_core.pfaffian import SkewMatrix, pfaffian
from icosa.exact_core.poly import MultiPoly, monomials
from icosa.exact_core.resultant import BinaryForm, resultant
from icosa.exact_core.scalars import SQRT5, QSqrt5

from conftest import rand_frac, small_fracs

square3 = st.lists(st.lists(small_fracs, min_size=3, max_size=3), min_size=3, max_size=3)


@given(square3)
def test_det_matches_cofactor_expansion(m):
    assert det(m) == det_expand(m)


@given(square3, square3)
def test_det_is_multiplicative(a, b):
    assert det(matmul(a, b)) == det(a) * det(b)


@given(square3)
def test_inverse_and_solve(m):
    if det(m) == 0:
        return
    assert matmul(m, inverse(m)) == identity(3)
    rhs = [Fraction(1), Fraction(-2), Fraction(3)]
    assert matvec(m, solve(m, rhs)) == rhs


def test_kernel_over_qsqrt5():
    m = [[1, SQRT5, 2], [SQRT5, 5, 2 * SQRT5]]
    ker = kernel_basis(m)
    assert len(ker) == 2
    for v in ker:
        assert all(x == 0 for x in matvec(m, v))
    assert rank(m) == 1


def _random_skew(n: int, rng: random.Random) -> SkewMatrix:
    return SkewMatrix(n, {(i, j): rand_frac(rng) for i, j in itertools.combinations(range(n), 2)})


@pytest.mark.parametrize("n", [2, 4, 6])
def test_pfaffian_squares_to_determinant(n):
    rng = random.Random(n)
    for _ in range(5):
        m = _random_skew(n, rng)
        assert pfaffian(m) ** 2 == det(m.rows())


def test_pfaffian_of_odd_size_is_rejected():
    m = _random_skew(5, random.Random(0))
    assert det(m.rows()) == 0
    with pytest.raises(ValueError):
        pfaffian(m)


def test_pfaffian_4x4_formula():
    m = SkewMatrix(4, {(0, 1): 2, (0, 2): 3, (0, 3): 5, (1, 2): 7, (1, 3): 11, (2, 3): 13})
    assert pfaffian(m) == 2 * 13 - 3 * 11 + 5 * 7


def test_multipoly_arithmetic():
    V = ("x", "y")
    x, y = MultiPoly.var("x", V), MultiPoly.var("y", V)
    p = (x + y) ** 3
    assert p.coefficient((2, 1)) == 3
    assert p.partial("x") == 3 * (x + y) ** 2
    assert p.evaluate([1, 2]) == 27
    assert (x * x - y * y) == (x - y) * (x + y)
    assert p.substitute([y, x]) == p


def test_monomial_count():
    assert len(monomials(3, 3)) == 10
    assert len(monomials(3, 10)) == 66


def _roots_product(coeffs):
    # a * prod (z1 - r z2)
    out = BinaryForm([coeffs[0]])
    for r in coeffs[1:]:
        out = BinaryForm([a - r * b for a, b in zip(list(out.coeffs) + [0], [0] + list(out.coeffs))])
    return out


def test_resultant_of_linear_factors():
    # Res(prod (z1 - a_i z2), prod (z1 - b_j z2)) = prod (b_j - a_i)
    a = [Fraction(1), Fraction(2)]
    b = [Fraction(-3), Fraction(5), Fraction(1, 2)]
    p, q = _roots_product([1] + a), _roots_product([1] + b)
    expected = 1
    for ai in a:
        for bj in b:
            expected *= bj - ai
    assert resultant(p, q) == expected


def test_resultant_zero_on_common_root():
    p = _roots_product([1, Fraction(2), Fraction(7)])
    q = _roots_product([1, Fraction(7), Fraction(-1)])
    assert resultant(p, q) == 0


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=4), st.lists(st.integers(1, 3), min_size=1, max_size=4))
def test_yun_recovers_multiplicities(roots, mults):
    pairs = {}
    for r, m in zip(roots, mults):
        pairs[r] = max(pairs.get(r, 0), m)
    p = [Fraction(1)]
    for r, m in pairs.items():
        for _ in range(m):
            p = [a - r * b for a, b in zip(p + [0], [0] + p)]
    decomposition = upoly.squarefree_decomposition(p)
    got = {}
    for factor, m in decomposition:
        for r in pairs:
            if upoly.divmod_poly(factor, [1, -r])[1] == []:
                got[r] = m
    assert got == pairs


def test_yun_over_qsqrt5():
    # (x - sqrt5)^2 (x + 1)
    p = [QSqrt5(1), -2 * SQRT5 + 1, 5 - 2 * SQRT5, QSqrt5(5)]
    dec = upoly.squarefree_decomposition(p)
    assert sorted(m for _, m in dec) == [1, 2]
