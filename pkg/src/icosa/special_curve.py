"""Exact arithmetic on the elliptic curve y^2 = x^3 + x^2 + 4x + 4.

Functions on the curve are kept in the normal form ``alpha(x) + beta(x) y``
(univariate coefficient lists, highest degree first). Divisors are computed
from the norm ``alpha^2 - beta^2 F`` without factoring over Q: zeros are
grouped into places over pairwise coprime squarefree factors of ``x``-polynomials,
so irrational points are handled exactly as Galois orbits.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterable, Mapping, Sequence

from .exact_core import upoly
from .exact_core.poly import MultiPoly


class CurveError(ValueError):
    pass


# -- the curve and its points -------------------------------------------------------------


@dataclass(frozen=True)
class WeierstrassCurve:
    """``y^2 = x^3 + a2 x^2 + a4 x + a6`` over Q."""

    a2: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self):
        for name in ("a2", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.discriminant() == 0:
            raise CurveError("singular curve")

    @property
    def rhs(self) -> list[Fraction]:
        return [Fraction(1), self.a2, self.a4, self.a6]

    def discriminant(self) -> Fraction:
        # discriminant of the cubic x^3 + a x^2 + b x + c
        a, b, c = self.a2, self.a4, self.a6
        return a * a * b * b - 4 * b**3 - 4 * a**3 * c - 27 * c * c + 18 * a * b * c

    def rhs_at(self, x) -> Fraction:
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def contains(self, p: ECPoint) -> bool:
        return p.is_infinity or p.y * p.y == self.rhs_at(p.x)

    def __str__(self) -> str:
        return f"y^2 = x^3 + {self.a2} x^2 + {self.a4} x + {self.a6}"


SPECIAL = WeierstrassCurve(1, 4, 4)


@dataclass(frozen=True, order=True)
class ECPoint:
    x: Fraction | None = None
    y: Fraction | None = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise CurveError("both coordinates or neither")
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self) -> ECPoint:
        return self if self.is_infinity else ECPoint(self.x, -self.y)

    def __str__(self) -> str:
        return "oo" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = ECPoint()

SIX_POINTS = (
    INFINITY,
    ECPoint(4, -10),
    ECPoint(0, -2),
    ECPoint(-1, 0),
    ECPoint(0, 2),
    ECPoint(4, 10),
)


def _check(curve: WeierstrassCurve, *points: ECPoint) -> None:
    for p in points:
        if not curve.contains(p):
            raise CurveError(f"{p} is not on {curve}")


def ec_add(p: ECPoint, q: ECPoint, curve: WeierstrassCurve = SPECIAL) -> ECPoint:
    """Chord-tangent addition with ``oo`` as the identity."""
    _check(curve, p, q)
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    if p.x == q.x and p.y == -q.y:
        return INFINITY
    if p == q:
        lam = (3 * p.x * p.x + 2 * curve.a2 * p.x + curve.a4) / (2 * p.y)
    else:
        lam = (q.y - p.y) / (q.x - p.x)
    x = lam * lam - curve.a2 - p.x - q.x
    y = lam * (p.x - x) - p.y
    return ECPoint(x, y)


def ec_mul(n: int, p: ECPoint, curve: WeierstrassCurve = SPECIAL) -> ECPoint:
    if n < 0:
        return ec_mul(-n, -p, curve)
    out, acc = INFINITY, p
    while n:
        if n & 1:
            out = ec_add(out, acc, curve)
        acc = ec_add(acc, acc, curve)
        n >>= 1
    return out


def point_order(p: ECPoint, bound: int = 100, curve: WeierstrassCurve = SPECIAL) -> int | None:
    """Least ``n <= bound`` with ``nP = oo``; ``None`` if there is none."""
    _check(curve, p)
    q = p
    for n in range(1, bound + 1):
        if q.is_infinity:
            return n
        q = ec_add(q, p, curve)
    return None


def cayley_table(points: Sequence[ECPoint], curve: WeierstrassCurve = SPECIAL) -> list[list[int]]:
    """Index table of ``ec_add`` on a finite set; raises if the set is not closed."""
    index = {p: i for i, p in enumerate(points)}
    table = []
    for p in points:
        row = []
        for q in points:
            r = ec_add(p, q, curve)
            if r not in index:
                raise CurveError(f"{p} + {q} = {r} leaves the set")
            row.append(index[r])
        table.append(row)
    return table


# -- functions on the curve ----------------------------------------------------------------


def _padd(a: Sequence, b: Sequence) -> list:
    a, b = upoly.trim(a), upoly.trim(b)
    n = max(len(a), len(b))
    a = [0] * (n - len(a)) + a
    b = [0] * (n - len(b)) + b
    return upoly.trim([x + y for x, y in zip(a, b)])


def _pneg(a: Sequence) -> list:
    return [-c for c in upoly.trim(a)]


def _pmul(a: Sequence, b: Sequence) -> list:
    a, b = upoly.trim(a), upoly.trim(b)
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return upoly.trim(out)


def _as_poly(c) -> list:
    if isinstance(c, (int, Fraction)):
        return upoly.trim([Fraction(c)])
    return upoly.trim([Fraction(v) for v in c])


@dataclass(frozen=True)
class CurveElement:
    """``alpha(x) + beta(x) y`` reduced with ``y^2 = F(x)``; a polynomial function."""

    alpha: tuple
    beta: tuple
    curve: WeierstrassCurve = SPECIAL

    @classmethod
    def make(cls, alpha=(), beta=(), curve: WeierstrassCurve = SPECIAL) -> CurveElement:
        return cls(tuple(_as_poly(alpha)), tuple(_as_poly(beta)), curve)

    @classmethod
    def from_multipoly(cls, p: MultiPoly, curve: WeierstrassCurve = SPECIAL) -> CurveElement:
        """Reduce a polynomial in ``(x, y)`` (variables named ``x`` and ``y``)."""
        ix, iy = p.variables.index("x"), p.variables.index("y")
        out = cls.make(curve=curve)
        for exps, c in p.terms.items():
            i, j = exps[ix], exps[iy]
            mono = [Fraction(c)] + [Fraction(0)] * i
            out = out + cls.make(mono, (), curve) * cls.y_power(j, curve)
        return out

    @classmethod
    def y_power(cls, j: int, curve: WeierstrassCurve = SPECIAL) -> CurveElement:
        base = [Fraction(1)]
        for _ in range(j // 2):
            base = _pmul(base, curve.rhs)
        return cls.make(base, (), curve) if j % 2 == 0 else cls.make((), base, curve)

    def is_zero(self) -> bool:
        return not self.alpha and not self.beta

    def __add__(self, other: CurveElement) -> CurveElement:
        return CurveElement(tuple(_padd(self.alpha, other.alpha)), tuple(_padd(self.beta, other.beta)), self.curve)

    def __neg__(self) -> CurveElement:
        return CurveElement(tuple(_pneg(self.alpha)), tuple(_pneg(self.beta)), self.curve)

    def __sub__(self, other: CurveElement) -> CurveElement:
        return self + (-other)

    def __mul__(self, other: CurveElement) -> CurveElement:
        a = _padd(_pmul(self.alpha, other.alpha), _pmul(_pmul(self.beta, other.beta), self.curve.rhs))
        b = _padd(_pmul(self.alpha, other.beta), _pmul(self.beta, other.alpha))
        return CurveElement(tuple(a), tuple(b), self.curve)

    def __pow__(self, n: int) -> CurveElement:
        out = CurveElement.make([1], (), self.curve)
        for _ in range(n):
            out = out * self
        return out

    def conjugate(self) -> CurveElement:
        return CurveElement(self.alpha, tuple(_pneg(self.beta)), self.curve)

    def norm(self) -> list:
        """``alpha^2 - beta^2 F``, the product with the conjugate."""
        return _padd(_pmul(self.alpha, self.alpha), _pneg(_pmul(_pmul(self.beta, self.beta), self.curve.rhs)))

    def __call__(self, p: ECPoint) -> Fraction:
        return _peval(self.alpha, p.x) + _peval(self.beta, p.x) * p.y


def _peval(p: Sequence, x) -> Fraction:
    out = Fraction(0)
    for c in p:
        out = out * x + c
    return out


@dataclass(frozen=True)
class CurveFunction:
    """A rational function ``numerator / denominator`` on the curve."""

    numerator: CurveElement
    denominator: CurveElement = field(default_factory=lambda: CurveElement.make([1]))

    def __post_init__(self):
        if self.denominator.is_zero():
            raise CurveError("denominator vanishes identically on the curve")

    @classmethod
    def from_multipoly(cls, num: MultiPoly, den: MultiPoly | None = None, curve: WeierstrassCurve = SPECIAL) -> CurveFunction:
        n = CurveElement.from_multipoly(num, curve)
        d = CurveElement.from_multipoly(den, curve) if den is not None else CurveElement.make([1], (), curve)
        return cls(n, d)

    def __mul__(self, other: CurveFunction) -> CurveFunction:
        return CurveFunction(self.numerator * other.numerator, self.denominator * other.denominator)

    def __truediv__(self, other: CurveFunction) -> CurveFunction:
        return CurveFunction(self.numerator * other.denominator, self.denominator * other.numerator)

    def __pow__(self, n: int) -> CurveFunction:
        if n < 0:
            return CurveFunction(self.denominator**-n, self.numerator**-n)
        return CurveFunction(self.numerator**n, self.denominator**n)


def element(alpha=(), beta=(), curve: WeierstrassCurve = SPECIAL) -> CurveFunction:
    return CurveFunction(CurveElement.make(alpha, beta, curve), CurveElement.make([1], (), curve))


# -- places and divisors -----------------------------------------------------------------------

# A place is ``(q, branch)`` with ``q`` a monic squarefree x-polynomial:
#   branch = "ram"            the single point over each root of q (q divides F);
#   branch = "fiber"          both points over each root of q, counted together;
#   branch = tuple r          the points (theta, r(theta)) for the roots theta of q;
#   q = () and branch = "oo"  the point at infinity.

Place = tuple
PLACE_INFINITY: Place = ((), "oo")


def _key(p: Sequence) -> tuple:
    return tuple(Fraction(c) for c in upoly.monic(p))


def _reduce(p: Sequence, q: Sequence) -> tuple:
    return tuple(upoly.divmod_poly(p, q)[1]) if upoly.degree(q) > 0 else ()


def place_degree(place: Place) -> int:
    q, branch = place
    if branch == "oo":
        return 1
    return 2 * upoly.degree(q) if branch == "fiber" else upoly.degree(q)


def _rational_sqrt(v: Fraction) -> Fraction | None:
    if v < 0:
        return None
    n, d = isqrt(v.numerator), isqrt(v.denominator)
    return Fraction(n, d) if n * n == v.numerator and d * d == v.denominator else None


def place_of_point(p: ECPoint, curve: WeierstrassCurve = SPECIAL) -> Place:
    _check(curve, p)
    if p.is_infinity:
        return PLACE_INFINITY
    q = (Fraction(1), -p.x)
    return (q, "ram") if p.y == 0 else (q, (p.y,))


def point_of_place(place: Place) -> ECPoint | None:
    """The rational point of a degree-1 place, else ``None``."""
    q, branch = place
    if branch == "oo":
        return INFINITY
    if upoly.degree(q) != 1 or branch == "fiber":
        return None
    x = -q[1]
    return ECPoint(x, 0) if branch == "ram" else ECPoint(x, branch[0] if branch else 0)


def _coprime_base(polys: Iterable[Sequence]) -> list[tuple]:
    """Pairwise coprime monic squarefree polynomials refining all inputs' Yun factors."""
    base: list[tuple] = []
    for p in polys:
        if upoly.degree(p) < 1:
            continue
        for factor, _ in upoly.squarefree_decomposition(p):
            base.append(_key(factor))
    changed = True
    while changed:
        changed = False
        for i in range(len(base)):
            for j in range(i + 1, len(base)):
                g = upoly.gcd(base[i], base[j])
                if upoly.degree(g) > 0:
                    a = upoly.exact_div(base[i], g)
                    b = upoly.exact_div(base[j], g)
                    rest = [base[k] for k in range(len(base)) if k not in (i, j)]
                    base = rest + [_key(g)] + [_key(x) for x in (a, b) if upoly.degree(x) > 0]
                    changed = True
                    break
            if changed:
                break
    return sorted(set(base))


def _valuation(p: Sequence, q: Sequence) -> float:
    """Multiplicity of ``q`` (squarefree, constant multiplicity) in ``p``."""
    p = upoly.trim(p)
    if not p:
        return float("inf")
    n = 0
    while True:
        quo, rem = upoly.divmod_poly(p, q)
        if rem:
            return n
        p, n = quo, n + 1


def _split_place(q: tuple, branch, curve: WeierstrassCurve) -> list[tuple[Place, int]]:
    """A fiber over a rational x whose y is rational splits into two points."""
    if branch == "fiber" and upoly.degree(q) == 1:
        y = _rational_sqrt(curve.rhs_at(-q[1]))
        if y is not None:
            return [((q, (y,)), 1), ((q, (-y,)), 1)]
    return [((q, branch), 1)]


@dataclass(frozen=True)
class CurveDivisor:
    """Finite formal sum of places with integer multiplicities."""

    terms: tuple = ()  # sorted ((place, n), ...)
    curve: WeierstrassCurve = SPECIAL

    @classmethod
    def from_places(cls, items: Mapping[Place, int] | Iterable[tuple[Place, int]], curve: WeierstrassCurve = SPECIAL) -> CurveDivisor:
        c: Counter = Counter()
        for place, n in dict(items).items() if isinstance(items, Mapping) else items:
            for sub, _ in _split_place(place[0], place[1], curve):
                c[sub] += n
        return cls(tuple(sorted((p, n) for p, n in c.items() if n)), curve)

    @classmethod
    def from_points(cls, items: Mapping[ECPoint, int], curve: WeierstrassCurve = SPECIAL) -> CurveDivisor:
        return cls.from_places([(place_of_point(p, curve), n) for p, n in items.items()], curve)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def degree(self) -> int:
        return sum(place_degree(p) * n for p, n in self.terms)

    def support(self) -> list[Place]:
        return [p for p, _ in self.terms]

    def points(self) -> dict[ECPoint, int]:
        """Rational part as ``{ECPoint: n}``; raises if a non-rational place occurs."""
        out = {}
        for place, n in self.terms:
            pt = point_of_place(place)
            if pt is None:
                raise CurveError(f"place {place} is not a rational point")
            out[pt] = n
        return out

    def is_rational(self) -> bool:
        return all(point_of_place(p) is not None for p, _ in self.terms)

    def is_effective(self) -> bool:
        return all(n > 0 for _, n in self.terms)

    def __add__(self, other: CurveDivisor) -> CurveDivisor:
        a, b = _common_refinement(self, other)
        c = Counter(dict(a.terms))
        c.update(dict(b.terms))
        return CurveDivisor(tuple(sorted((p, n) for p, n in c.items() if n)), self.curve)

    def __neg__(self) -> CurveDivisor:
        return CurveDivisor(tuple((p, -n) for p, n in self.terms), self.curve)

    def __sub__(self, other: CurveDivisor) -> CurveDivisor:
        return self + (-other)

    def __rmul__(self, k: int) -> CurveDivisor:
        return CurveDivisor(tuple((p, k * n) for p, n in self.terms if k * n), self.curve)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CurveDivisor):
            return NotImplemented
        a, b = _common_refinement(self, other)
        return a.terms == b.terms

    def __hash__(self) -> int:
        return hash(self.degree())

    def halve(self) -> CurveDivisor:
        if any(n % 2 for _, n in self.terms):
            raise CurveError("divisor is not even")
        return CurveDivisor(tuple((p, n // 2) for p, n in self.terms), self.curve)

    def __str__(self) -> str:
        parts = []
        for place, n in self.terms:
            pt = point_of_place(place)
            parts.append(f"{n}*{pt if pt is not None else place}")
        return " + ".join(parts) or "0"


def _refine_place(place: Place, base: Sequence[tuple], curve: WeierstrassCurve) -> list[Place]:
    q, branch = place
    if branch == "oo":
        return [place]
    out = []
    for b in base:
        if upoly.degree(upoly.gcd(q, b)) == upoly.degree(b):
            if isinstance(branch, tuple):
                out.extend([(b, _reduce(branch, b))])
            else:
                out.extend(p for p, _ in _split_place(b, branch, curve))
    return out


def _fiber_split(terms: Counter, split: Mapping[tuple, tuple]) -> Counter:
    """Expand a fiber into its two branches when a branch over the same q is known."""
    out: Counter = Counter()
    for (q, br), n in terms.items():
        if br == "fiber" and q in split:
            r = split[q]
            out[(q, r)] += n
            out[(q, _reduce(_pneg(r), q))] += n
        else:
            out[(q, br)] += n
    return out


def _common_refinement(*divs: CurveDivisor) -> list[CurveDivisor]:
    """Rewrite divisors over one coprime base so equal divisors get equal terms."""
    curve = divs[0].curve
    base = _coprime_base([p[0] for d in divs for p, _ in d.terms if p[1] != "oo"])
    refined = []
    for d in divs:
        c: Counter = Counter()
        for place, n in d.terms:
            for sub in _refine_place(place, base, curve):
                c[sub] += n
        refined.append(c)
    split = {q: br for c in refined for (q, br) in c if isinstance(br, tuple)}
    out = []
    for c in refined:
        c = _fiber_split(c, split)
        out.append(CurveDivisor(tuple(sorted((p, n) for p, n in c.items() if n)), curve))
    return out


# -- divisors of functions ------------------------------------------------------------------


def element_divisor(h: CurveElement) -> CurveDivisor:
    """Divisor of a polynomial function ``alpha + beta y``.

    For each coprime factor ``q`` of ``alpha, beta, F`` and the norm: over roots of
    ``F`` the local parameter is ``y`` and ``ord = min(2 v(alpha), 2 v(beta) + 1)``;
    elsewhere ``x - x0`` is a local parameter, ``m = min(v(alpha), v(beta))`` is
    common to both branches and the rest of the norm's valuation sits on the branch
    ``y = -alpha'/beta' mod q``. The order at infinity is read from degrees and
    checked against the affine total.
    """
    if h.is_zero():
        raise CurveError("function vanishes identically on the curve")
    curve = h.curve
    F = curve.rhs
    N = h.norm()
    c: Counter = Counter()
    for q in _coprime_base([h.alpha, h.beta, F, N]):
        a, b, n = _valuation(h.alpha, q), _valuation(h.beta, q), _valuation(N, q)
        if n == 0:
            continue
        if _valuation(F, q) > 0:
            c[(q, "ram")] += int(min(2 * a, 2 * b + 1))
            continue
        m = int(min(a, b))
        k = int(n - 2 * m)
        if k == 0:
            for sub, _ in _split_place(q, "fiber", curve):
                c[sub] += m
            continue
        qm = [Fraction(1)]
        for _ in range(m):
            qm = _pmul(qm, q)
        a1 = upoly.exact_div(h.alpha, qm) if h.alpha else []
        b1 = upoly.exact_div(h.beta, qm)
        r = _branch(a1, b1, q)
        c[(q, r)] += m + k
        if m:
            c[(q, _reduce(_pneg(r), q))] += m
    affine = sum(place_degree(p) * n for p, n in c.items())
    inf = _order_at_infinity(h)
    if inf != -affine:
        raise AssertionError("order at infinity disagrees with the affine degree")
    if inf:
        c[PLACE_INFINITY] += inf
    return CurveDivisor(tuple(sorted((p, n) for p, n in c.items() if n)), curve)


def _branch(alpha: Sequence, beta: Sequence, q: Sequence) -> tuple:
    """``-alpha / beta mod q`` (beta is a unit mod q here)."""
    inv = _inverse_mod(beta, q)
    return _reduce(_pneg(_pmul(alpha, inv)), q)


def _inverse_mod(a: Sequence, q: Sequence) -> list:
    # extended Euclid over Q[x]
    r0, r1 = upoly.trim(q), _reduce(a, q)
    s0, s1 = [], [Fraction(1)]
    while r1:
        quo, rem = upoly.divmod_poly(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _padd(s0, _pneg(_pmul(quo, s1)))
    if upoly.degree(r0) != 0:
        raise CurveError("not invertible modulo q")
    return [c / r0[0] for c in s0] if s0 else []


def _order_at_infinity(h: CurveElement) -> int:
    # x has a double pole and y a triple pole, so the two parts never cancel
    orders = []
    if h.alpha:
        orders.append(-2 * upoly.degree(h.alpha))
    if h.beta:
        orders.append(-2 * upoly.degree(h.beta) - 3)
    return min(orders)


def function_divisor(h: CurveFunction | CurveElement) -> CurveDivisor:
    """``div(h)``; total degree zero."""
    if isinstance(h, CurveElement):
        return element_divisor(h)
    return element_divisor(h.numerator) - element_divisor(h.denominator)


def order_at(h: CurveFunction | CurveElement, p: ECPoint) -> int:
    d = function_divisor(h)
    target = CurveDivisor.from_points({p: 1}, d.curve)
    a, b = _common_refinement(d, target)
    place = b.terms[0][0]
    return dict(a.terms).get(place, 0)


# -- the conic and the covering --------------------------------------------------------------

CONIC = (Fraction(8), Fraction(-4), Fraction(-12))  # y^2 = 4(2x - 3)(x + 1)


def conic_intersection(curve: WeierstrassCurve = SPECIAL, conic: Sequence = CONIC) -> CurveDivisor:
    """Intersection divisor with the conic ``y^2 = G(x)``.

    On the curve the conic's equation restricts to ``F(x) - G(x)``, so the
    intersection multiplicities are the orders of that function.
    """
    diff = _padd(curve.rhs, _pneg(_as_poly(conic)))
    if not diff:
        raise CurveError("degenerate pair: the conic contains the curve")
    d = element_divisor(CurveElement.make(diff, (), curve))
    return CurveDivisor(tuple((p, n) for p, n in d.terms if p != PLACE_INFINITY), curve)


def covering_square() -> CurveFunction:
    """``p^2 = (1 + x)^5 (y - x - 2) / (y + 3x - 2)^5``."""
    one_x = element([1, 1])
    num = element([-1, -2], [1])
    den = element([3, -2], [1])
    return one_x**5 * num / den**5


@dataclass(frozen=True)
class CoveringReport:
    div_p2: CurveDivisor
    even: bool
    div_p: CurveDivisor
    zero_fiber: dict
    pole_fiber: dict
    zero_profile: tuple
    pole_profile: tuple
    support_in_six: bool
    remaining_points: tuple
    covering_degree: int
    remaining_ramification: int  # Riemann-Hurwitz budget left for the third branch point

    @property
    def passed(self) -> bool:
        return (
            self.even
            and self.support_in_six
            and self.zero_profile == (5, 1)
            and self.pole_profile == (5, 1)
            and self.remaining_ramification == 4
        )


def verify_covering_structure() -> CoveringReport:
    """``div(p^2)`` is even; ``p`` has (5, 1) fibers over 0 and infinity.

    The fiber over the third branch point is not determined by ``p^2``; only the
    ramification left over by Riemann-Hurwitz is reported.
    """
    d2 = function_divisor(covering_square())
    even = all(n % 2 == 0 for _, n in d2.terms)
    d1 = d2.halve()
    pts = d1.points()
    zeros = {p: n for p, n in pts.items() if n > 0}
    poles = {p: -n for p, n in pts.items() if n < 0}
    degree = sum(zeros.values())
    # genus 1 cover of P^1: 0 = degree * (-2) + total ramification
    ramification = 2 * degree
    used = sum(n - 1 for n in zeros.values()) + sum(n - 1 for n in poles.values())
    six = set(SIX_POINTS)
    return CoveringReport(
        div_p2=d2,
        even=even,
        div_p=d1,
        zero_fiber=zeros,
        pole_fiber=poles,
        zero_profile=tuple(sorted(zeros.values(), reverse=True)),
        pole_profile=tuple(sorted(poles.values(), reverse=True)),
        support_in_six=set(pts) <= six,
        remaining_points=tuple(p for p in SIX_POINTS if p not in pts),
        covering_degree=degree,
        remaining_ramification=ramification - used,
    )
