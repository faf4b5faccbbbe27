"""``icosa`` command line: classify, find-icosa, verify."""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Sequence

from ..exact_core.roots import PrecisionError
from ..exact_core.scalars import is_exact
from ..sextic_invariants import classify_bundle
from .documents import (
    DocumentError,
    cubic_from_document,
    cubic_to_document,
    decimal,
    dumps,
    encode_scalar,
    load_json,
    sextic_from_document,
)
from .suites import SUITES

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_MALFORMED = 2
EXIT_PRECISION = 3
EXIT_BUDGET = 4

DEFAULT_PRECISION = 128


def default_precision() -> int:
    raw = os.environ.get("ICOSA_PRECISION_BITS")
    if not raw:
        return DEFAULT_PRECISION
    try:
        bits = int(raw)
    except ValueError:
        raise DocumentError(f"ICOSA_PRECISION_BITS must be an integer, got {raw!r}") from None
    if bits < 53:
        raise DocumentError("ICOSA_PRECISION_BITS must be at least 53")
    return bits


def _invariant_value(x, precision: int) -> dict:
    import mpmath

    ctx = mpmath.MPContext()
    ctx.prec = precision
    if is_exact(x):
        from ..exact_core.scalars import to_mpc

        z = to_mpc(x, ctx)
    else:
        z = ctx.mpc(x)
    digits = max(15, int(precision * 0.30103) - 4)
    out = {"value": [decimal(ctx.re(z), digits), decimal(ctx.im(z), digits)]}
    if is_exact(x):
        out["exact"] = encode_scalar(x)
    return out


def classification_report(f, precision: int) -> dict:
    res = classify_bundle(f, precision)
    inv = res.invariants
    return {
        "verdict": res.verdict.value,
        "flags": res.flags.as_dict(),
        "invariants": {name: _invariant_value(getattr(inv, name), precision) for name in ("A", "B", "C", "Delta", "J6", "J10")},
        "precision": precision,
        "root_partition": list(res.profile.partition),
        "sextic": [encode_scalar(c) for c in res.sextic.coeffs],
    }


def _load_input(args, precision: int):
    if args.cubic:
        return cubic_from_document(load_json(args.cubic), precision)
    return sextic_from_document(load_json(args.sextic), precision)


def cmd_classify(args) -> int:
    precision = args.precision or default_precision()
    f = _load_input(args, precision)
    print(dumps(classification_report(f, precision)))
    return EXIT_OK


def _complex_pair(z) -> list[str]:
    return [repr(float(z.real)), repr(float(z.imag))]


def cmd_find_icosa(args) -> int:
    from ..icosa_solver import SolveConfig, find_icosahedral_sets, summarize

    precision = args.precision or default_precision()
    f = cubic_from_document(load_json(args.cubic), precision)
    try:
        config = SolveConfig(starts=args.starts, tol=args.tol, seed=args.seed, precision=precision)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    verdict = classify_bundle(f, precision).verdict.value
    sols = find_icosahedral_sets(f, config)
    summary = summarize(f, sols, verdict)
    out = {
        "class_count": summary.class_count,
        "verdict": verdict,
        "observed": summary.observed,
        "infinitely_many_signature": summary.infinitely_many_signature,
        "notes": list(summary.notes),
        "config": {"starts": config.starts, "tol": config.tol, "seed": config.seed, "precision": precision},
        "solutions": [
            {
                "s": _complex_pair_list(sol.param.s),
                "axes": [_complex_pair_list(a) for a in sol.axes],
                "residual": f"{float(sol.residual):.3e}",
            }
            for sol in sols
        ],
    }
    print(dumps(out))
    return EXIT_OK if sols else EXIT_BUDGET


def _complex_pair_list(v) -> list[list[str]]:
    return [_complex_pair(complex(x)) for x in v]


def cmd_generate(args) -> int:
    import random

    from ..icosa_solver import generate_cubic_through, random_rational_param

    param = random_rational_param(random.Random(args.seed)) if args.rotate else None
    gen = generate_cubic_through(param, seed=args.seed)
    doc = cubic_to_document(gen.f)
    doc["generating_axes"] = [[encode_scalar(c) for c in a] for a in gen.axes]
    print(dumps(doc))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = []
    failed = None
    start = time.perf_counter()
    for name in names:
        suite = SUITES[name]
        checks = suite(max_d=args.max_d) if name == "weights" else suite()
        for check in checks:
            results.append({"suite": name, **check.as_dict()})
            mark = "PASS" if check.passed else "FAIL"
            print(f"[{mark}] {name}: {check.name}" + (f"  ({check.detail})" if check.detail and not check.passed else ""), file=sys.stderr)
            if not check.passed:
                failed = check
                break
        if failed:
            break
    summary = {
        "suites": names,
        "passed": failed is None,
        "checks": results,
        "seconds": round(time.perf_counter() - start, 1) if args.timing else None,
    }
    if not args.timing:
        del summary["seconds"]
    print(dumps(summary))
    return EXIT_OK if failed is None else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="icosa", description="Icosahedral sets on plane cubics and related checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a cubic or sextic by its invariants")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--cubic", metavar="FILE")
    src.add_argument("--sextic", metavar="FILE")
    p.add_argument("--precision", type=int, default=None, metavar="BITS")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("find-icosa", help="find icosahedral sets on a harmonic cubic")
    p.add_argument("--cubic", metavar="FILE", required=True)
    p.add_argument("--starts", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--precision", type=int, default=None, metavar="BITS")
    p.set_defaults(func=cmd_find_icosa)

    p = sub.add_parser("generate", help="emit a random harmonic cubic through a known icosahedral set")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rotate", action="store_true", help="use a random rational rotation of the standard icosahedron")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--max-d", type=int, default=6)
    p.add_argument("--timing", action="store_true", help="include wall time in the JSON summary")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except PrecisionError as exc:
        print(f"precision failure: {exc}", file=sys.stderr)
        return EXIT_PRECISION


if __name__ == "__main__":
    sys.exit(main())
