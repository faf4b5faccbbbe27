"""Exact scalars: rationals, Q(sqrt5) and Q(i, sqrt5).

Rationals are plain :class:`fractions.Fraction`. The two extension fields are
small immutable classes that coerce upward along the tower
``int -> Fraction -> QSqrt5 -> QISqrt5`` so mixed arithmetic just works.
Numeric complex values are mpmath ``mpc`` objects; exact and numeric values are
never mixed implicitly, use :func:`to_mpc`.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

import mpmath


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


class QSqrt5:
    """The number ``a + b*sqrt(5)`` with rational ``a``, ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = _frac(a)
        self.b = _frac(b)

    @staticmethod
    def lift(x) -> QSqrt5:
        if isinstance(x, QSqrt5):
            return x
        return QSqrt5(x, 0)

    def __repr__(self) -> str:
        return f"QSqrt5({self.a}, {self.b})"

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}*sqrt5"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}*sqrt5"

    def __eq__(self, other) -> bool:
        if isinstance(other, QSqrt5):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __neg__(self) -> QSqrt5:
        return QSqrt5(-self.a, -self.b)

    def __pos__(self) -> QSqrt5:
        return self

    def __add__(self, other):
        if isinstance(other, QSqrt5):
            return QSqrt5(self.a + other.a, self.b + other.b)
        if isinstance(other, (int, Fraction)):
            return QSqrt5(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, QSqrt5):
            return QSqrt5(self.a - other.a, self.b - other.b)
        if isinstance(other, (int, Fraction)):
            return QSqrt5(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSqrt5(other - self.a, -self.b)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, QSqrt5):
            a, b, c, d = self.a, self.b, other.a, other.b
            return QSqrt5(a * c + 5 * b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return QSqrt5(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> QSqrt5:
        """Galois conjugate ``sqrt5 -> -sqrt5``."""
        return QSqrt5(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def inverse(self) -> QSqrt5:
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(sqrt5)")
        return QSqrt5(self.a / n, -self.b / n)

    def __truediv__(self, other):
        if isinstance(other, QSqrt5):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return QSqrt5(self.a / other, self.b / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        return _power(self, n, QSqrt5(1))


class QISqrt5:
    """The number ``re + i*im`` with ``re``, ``im`` in Q(sqrt5)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = QSqrt5.lift(re)
        self.im = QSqrt5.lift(im)

    @staticmethod
    def lift(x) -> QISqrt5:
        if isinstance(x, QISqrt5):
            return x
        return QISqrt5(x, 0)

    def __repr__(self) -> str:
        return f"QISqrt5({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        return f"({self.re}) + i*({self.im})"

    def __eq__(self, other) -> bool:
        if isinstance(other, QISqrt5):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction, QSqrt5)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __neg__(self) -> QISqrt5:
        return QISqrt5(-self.re, -self.im)

    def __pos__(self) -> QISqrt5:
        return self

    def __add__(self, other):
        if isinstance(other, QISqrt5):
            return QISqrt5(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction, QSqrt5)):
            return QISqrt5(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, QISqrt5):
            return QISqrt5(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction, QSqrt5)):
            return QISqrt5(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction, QSqrt5)):
            return QISqrt5(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, QISqrt5):
            a, b, c, d = self.re, self.im, other.re, other.im
            return QISqrt5(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction, QSqrt5)):
            return QISqrt5(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> QISqrt5:
        """Complex conjugation ``i -> -i`` (fixes sqrt5)."""
        return QISqrt5(self.re, -self.im)

    def inverse(self) -> QISqrt5:
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(i, sqrt5)")
        ninv = n.inverse()
        return QISqrt5(self.re * ninv, -self.im * ninv)

    def __truediv__(self, other):
        if isinstance(other, QISqrt5):
            return self * other.inverse()
        if isinstance(other, (int, Fraction, QSqrt5)):
            if not other:
                raise ZeroDivisionError("division by zero")
            inv = QSqrt5.lift(other).inverse()
            return QISqrt5(self.re * inv, self.im * inv)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction, QSqrt5)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        return _power(self, n, QISqrt5(1))


def _power(x, n: int, one):
    if not isinstance(n, int):
        return NotImplemented
    if n < 0:
        return _power(x.inverse(), -n, one)
    result = one
    base = x
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


SQRT5 = QSqrt5(0, 1)
PHI = QSqrt5(Fraction(1, 2), Fraction(1, 2))
I = QISqrt5(0, 1)

EXACT_TYPES = (int, Fraction, QSqrt5, QISqrt5)


def is_exact(x) -> bool:
    return isinstance(x, EXACT_TYPES)


def simplify(x):
    """Push an exact scalar down the tower as far as it goes."""
    if isinstance(x, QISqrt5):
        if x.im:
            return x
        x = x.re
    if isinstance(x, QSqrt5):
        if x.b:
            return x
        x = x.a
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def conjugate_i(x):
    """Complex conjugation on any exact scalar."""
    if isinstance(x, QISqrt5):
        return x.conjugate()
    return x


def to_mpc(x, ctx=mpmath.mp):
    """Convert an exact or numeric scalar to an ``mpc`` in ``ctx``."""
    if isinstance(x, QISqrt5):
        return ctx.mpc(_qs5_to_mpf(x.re, ctx), _qs5_to_mpf(x.im, ctx))
    if isinstance(x, QSqrt5):
        return ctx.mpc(_qs5_to_mpf(x, ctx))
    if isinstance(x, Fraction):
        return ctx.mpc(ctx.mpf(x.numerator) / x.denominator)
    if isinstance(x, int):
        return ctx.mpc(x)
    return ctx.mpc(x)


def _qs5_to_mpf(x: QSqrt5, ctx):
    a = ctx.mpf(x.a.numerator) / x.a.denominator
    if not x.b:
        return a
    return a + ctx.mpf(x.b.numerator) / x.b.denominator * ctx.sqrt(5)


def to_complex(x) -> complex:
    """Double-precision value of a scalar."""
    v = to_mpc(x, mpmath.mp)
    return complex(v)
