"""Arbitrary-precision complex roots with multiplicity clustering.

Roots are refined by Aberth-Ehrlich simultaneous iteration at a working
precision of ``2*precision + 16`` bits, with a companion-matrix eigenvalue
fallback when the iteration stalls. If the residual certificate is not met the
working precision is doubled. Two approximants belong to one cluster when they
are closer than ``2^(-precision/4)`` (relative to their modulus).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import mpmath

from .scalars import to_mpc


class PrecisionError(ArithmeticError):
    """Requested precision could not be certified within the iteration budget."""


@dataclass(frozen=True)
class ClusteredRoot:
    value: mpmath.mpc
    multiplicity: int
    radius: mpmath.mpf  # max distance of cluster members from the centre


@dataclass(frozen=True)
class RootReport:
    roots: tuple[ClusteredRoot, ...]
    precision: int
    working_precision: int
    min_separation: mpmath.mpf  # between distinct cluster centres; inf if < 2 clusters
    max_residual: mpmath.mpf  # max |p(r)| / ||p|| over the raw approximants
    method: str

    def flat(self) -> list[mpmath.mpc]:
        """Cluster centres repeated by multiplicity."""
        out = []
        for r in self.roots:
            out.extend([r.value] * r.multiplicity)
        return out


def _horner(coeffs, z):
    p = coeffs[0]
    dp = 0
    for c in coeffs[1:]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _abs_horner(abscoeffs, r):
    s = abscoeffs[0]
    for c in abscoeffs[1:]:
        s = s * r + c
    return s


def _initial_guesses(ctx, coeffs):
    n = len(coeffs) - 1
    lead = abs(coeffs[0])
    bound = max(abs(c) / lead for c in coeffs[1:]) + 1
    radius = min(bound, ctx.mpf(2) ** 32)
    # Off-axis angles avoid symmetric stalls on real or cyclotomic inputs.
    return [
        radius * ctx.mpf("0.5") * ctx.expj(2 * ctx.pi * k / n + ctx.mpf("0.4")) for k in range(n)
    ]


def _aberth(ctx, coeffs, z, max_iter):
    n = len(z)
    abscoeffs = [abs(c) for c in coeffs]
    eps = ctx.mpf(2) ** (-ctx.prec + 6)
    done = [False] * n
    for it in range(max_iter):
        moved = False
        for i in range(n):
            if done[i]:
                continue
            p, dp = _horner(coeffs, z[i])
            noise = eps * _abs_horner(abscoeffs, abs(z[i]))
            if abs(p) <= noise:
                done[i] = True
                continue
            if dp == 0:
                z[i] += ctx.mpf(2) ** (-ctx.prec // 4)
                moved = True
                continue
            ratio = p / dp
            s = 0
            for j in range(n):
                if j != i:
                    diff = z[i] - z[j]
                    if diff != 0:
                        s += 1 / diff
            step = ratio / (1 - ratio * s)
            z[i] -= step
            moved = True
            if abs(step) <= eps * max(1, abs(z[i])):
                done[i] = True
        if all(done) or not moved:
            return True, it + 1
    return False, max_iter


def _companion_roots(ctx, coeffs):
    n = len(coeffs) - 1
    lead = coeffs[0]
    m = ctx.matrix(n, n)
    for j in range(n):
        m[0, j] = -coeffs[j + 1] / lead
    for i in range(1, n):
        m[i, i - 1] = 1
    evals = ctx.eig(m, left=False, right=False)
    return [ctx.mpc(e) for e in evals]


def _cluster(ctx, values, precision):
    tol = ctx.mpf(2) ** (-ctx.mpf(precision) / 4)
    n = len(values)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            scale = max(1, abs(values[i]), abs(values[j]))
            if abs(values[i] - values[j]) < tol * scale:
                parent[find(i)] = find(j)
    groups: dict[int, list] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(values[i])
    clusters = []
    for members in groups.values():
        centre = sum(members) / len(members)
        radius = max(abs(m - centre) for m in members)
        clusters.append(ClusteredRoot(centre, len(members), radius))
    return clusters


def _sort_key(r: ClusteredRoot):
    return (float(r.value.real), float(r.value.imag), -r.multiplicity)


def complex_roots(
    coeffs: Sequence,
    precision: int = 128,
    ctx: mpmath.ctx_mp.MPContext | None = None,
    max_precision: int | None = None,
) -> RootReport:
    """All complex roots of ``coeffs[0]*z^n + ... + coeffs[n]``.

    Coefficients may be exact scalars or mpmath numbers. Exact trailing zeros
    give exact roots at 0. The certificate is
    ``|p(r)| <= 2^(-precision/2) * sum_k |c_k| |r|^(n-k)`` for every approximant.
    """
    coeffs = list(coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if len(coeffs) < 2:
        raise ValueError("complex_roots needs a polynomial of degree >= 1")
    zeros_at_origin = 0
    while coeffs[-1] == 0:
        coeffs.pop()
        zeros_at_origin += 1

    ctx = ctx if ctx is not None else mpmath.MPContext()
    max_precision = max_precision or 16 * precision + 256
    wp = 2 * precision + 16
    while wp <= max_precision:
        ctx.prec = wp
        mc = [to_mpc(c, ctx) for c in coeffs]
        values: list = []
        method = "exact"
        max_res = ctx.mpf(0)
        if len(mc) > 1:
            z = _initial_guesses(ctx, mc)
            ok, _ = _aberth(ctx, mc, z, max_iter=200 + 8 * wp)
            method = "aberth"
            if not ok:
                z = _companion_roots(ctx, mc)
                ok, _ = _aberth(ctx, mc, z, max_iter=200 + 8 * wp)
                method = "companion+aberth"
            norm = max(abs(c) for c in mc)
            abscoeffs = [abs(c) for c in mc]
            bound = ctx.mpf(2) ** (-ctx.mpf(precision) / 2)
            certified = ok
            for r in z:
                res = abs(_horner(mc, r)[0])
                max_res = max(max_res, res / norm)
                if res > bound * _abs_horner(abscoeffs, abs(r)):
                    certified = False
            if not certified:
                wp *= 2
                continue
            values = list(z)
        values.extend([ctx.mpc(0)] * zeros_at_origin)
        clusters = sorted(_cluster(ctx, values, precision), key=_sort_key)
        sep = ctx.inf
        for i in range(len(clusters)):
            for j in range(i + 1, len(clusters)):
                sep = min(sep, abs(clusters[i].value - clusters[j].value))
        return RootReport(tuple(clusters), precision, wp, sep, max_res, method)
    raise PrecisionError(f"could not certify roots at {precision} bits (tried up to {max_precision})")
