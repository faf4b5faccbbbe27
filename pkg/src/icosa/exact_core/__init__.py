"""Exact arithmetic, polynomials, linear algebra, Pfaffians, resultants, roots."""

from .linalg import det, inverse, kernel_basis, rank, rref, solve
from .pfaffian import SkewMatrix, pfaffian
from .poly import MultiPoly, monomials, poly_arith
from .resultant import BinaryForm, resultant, sylvester_matrix
from .roots import ClusteredRoot, PrecisionError, RootReport, complex_roots
from .scalars import I, PHI, SQRT5, QISqrt5, QSqrt5, is_exact, simplify, to_complex, to_mpc

__all__ = [
    "BinaryForm",
    "ClusteredRoot",
    "I",
    "MultiPoly",
    "PHI",
    "PrecisionError",
    "QISqrt5",
    "QSqrt5",
    "RootReport",
    "SQRT5",
    "SkewMatrix",
    "complex_roots",
    "det",
    "inverse",
    "is_exact",
    "kernel_basis",
    "monomials",
    "pfaffian",
    "poly_arith",
    "rank",
    "resultant",
    "rref",
    "simplify",
    "solve",
    "sylvester_matrix",
    "to_complex",
    "to_mpc",
]
