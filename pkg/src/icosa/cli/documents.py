"""JSON documents for cubics and sextics, and the lossless scalar encoding."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

import mpmath

from ..exact_core.poly import MultiPoly, monomials
from ..exact_core.scalars import QISqrt5, QSqrt5, is_exact, simplify
from ..so3_rep import VARS, BinaryForm2d, HarmonicForm

FORMAT_VERSION = 1
CUBIC_BASIS = "ternary-monomial-deg3"
SEXTIC_BASIS = "binary-sextic"
CUBIC_MONOMIALS = tuple(monomials(3, 3))


class DocumentError(ValueError):
    """Malformed input document (exit code 2)."""


def _q(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_q(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise DocumentError(f"rational must be a string 'p/q', got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"bad rational {s!r}") from exc


def decimal(x, digits: int | None = None) -> str:
    ctx = getattr(x, "context", mpmath.mp)
    if digits is None:
        digits = int(ctx.prec * 0.30103) + 2
    return ctx.nstr(x, digits, min_fixed=-5, max_fixed=5) if x != 0 else "0"


def encode_scalar(x, digits: int | None = None):
    """Exact values as tagged objects, numeric values as ``["re", "im"]`` strings."""
    if is_exact(x):
        x = simplify(x)
        if isinstance(x, (int, Fraction)):
            return {"q": _q(x)}
        if isinstance(x, QSqrt5):
            return {"q5": [_q(x.a), _q(x.b)]}
        if isinstance(x, QISqrt5):
            re, im = x.re, x.im
            return {"qi5": [_q(re.a), _q(re.b), _q(im.a), _q(im.b)]}
    ctx = getattr(x, "context", mpmath.mp)
    z = x if hasattr(x, "imag") and hasattr(x, "context") else ctx.mpc(x)
    return [decimal(ctx.re(z), digits), decimal(ctx.im(z), digits)]


def decode_scalar(obj, ctx=mpmath.mp):
    if isinstance(obj, dict):
        if len(obj) != 1:
            raise DocumentError(f"scalar object needs exactly one tag: {obj!r}")
        (tag, val), = obj.items()
        if tag == "q":
            return _parse_q(val)
        if tag == "q5":
            if not isinstance(val, list) or len(val) != 2:
                raise DocumentError("q5 needs two rationals")
            return simplify(QSqrt5(_parse_q(val[0]), _parse_q(val[1])))
        if tag == "qi5":
            if not isinstance(val, list) or len(val) != 4:
                raise DocumentError("qi5 needs four rationals")
            a, b, c, d = (_parse_q(v) for v in val)
            return simplify(QISqrt5(QSqrt5(a, b), QSqrt5(c, d)))
        raise DocumentError(f"unknown scalar tag {tag!r}")
    if isinstance(obj, list):
        if len(obj) != 2 or not all(isinstance(v, str) for v in obj):
            raise DocumentError("numeric scalar must be two decimal strings")
        try:
            return ctx.mpc(ctx.mpf(obj[0]), ctx.mpf(obj[1]))
        except ValueError as exc:
            raise DocumentError(f"bad decimal in {obj!r}") from exc
    raise DocumentError(f"unsupported scalar {obj!r}")


def _coefficients(doc: dict, n: int, basis: str, precision: int) -> tuple[list, int]:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("version", FORMAT_VERSION) != FORMAT_VERSION:
        raise DocumentError(f"unsupported format version {doc.get('version')!r}")
    if doc.get("basis", basis) != basis:
        raise DocumentError(f"expected basis {basis!r}")
    coeffs = doc.get("coefficients")
    if not isinstance(coeffs, list) or len(coeffs) != n:
        raise DocumentError(f"coefficients must be an array of length {n}")
    prec = int(doc.get("precision", precision))
    ctx = mpmath.MPContext()
    ctx.prec = prec
    return [decode_scalar(c, ctx) for c in coeffs], prec


def cubic_from_document(doc: dict, precision: int = 128) -> HarmonicForm:
    coeffs, _ = _coefficients(doc, 10, CUBIC_BASIS, precision)
    poly = MultiPoly(VARS, dict(zip(CUBIC_MONOMIALS, coeffs)))
    if poly.is_zero():
        raise DocumentError("zero cubic")
    try:
        return HarmonicForm(poly, 3)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def cubic_to_document(f: HarmonicForm | MultiPoly, precision: int | None = None) -> dict:
    p = f.poly if isinstance(f, HarmonicForm) else f
    doc: dict[str, Any] = {
        "version": FORMAT_VERSION,
        "basis": CUBIC_BASIS,
        "harmonic": True,
        "coefficients": [encode_scalar(p.coefficient(m)) for m in CUBIC_MONOMIALS],
    }
    if precision is not None:
        doc["precision"] = precision
    return doc


def sextic_from_document(doc: dict, precision: int = 128) -> BinaryForm2d:
    coeffs, _ = _coefficients(doc, 7, SEXTIC_BASIS, precision)
    if all(c == 0 for c in coeffs):
        raise DocumentError("zero sextic")
    return BinaryForm2d(coeffs)


def sextic_to_document(coeffs: Sequence, precision: int | None = None) -> dict:
    doc: dict[str, Any] = {
        "version": FORMAT_VERSION,
        "basis": SEXTIC_BASIS,
        "coefficients": [encode_scalar(c) for c in coeffs],
    }
    if precision is not None:
        doc["precision"] = precision
    return doc


def load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)
