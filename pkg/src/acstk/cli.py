"""Command-line frontend.

Subcommands: classify, lpoly, series, verify-j, nijenhuis, assoc-compare,
bernoulli.  All rationals are printed reduced as "num/den" (denominator
omitted when 1).  Exit codes: 0 on success, 2 on invalid input, 3 on an
internal invariant violation.  The environment variable ACSTK_SEED
overrides the default sampling seed 0.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import classify as classify_mod
from .cayley_dickson import CDElement
from .errors import InternalInvariantError
from .genera import bernoulli, l_polynomial, q_series
from .sphere_acs import (
    SPHERE_LEVEL,
    compare_nijenhuis_associator,
    nijenhuis,
    rational_sphere_point,
    tangent_projection,
    verify_j_structure,
)


def _default_seed() -> int:
    raw = os.environ.get("ACSTK_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"ACSTK_SEED must be an integer, got {raw!r}")


def _parse_rationals(text: str, what: str) -> list[Fraction]:
    try:
        return [Fraction(part.strip()) for part in text.split(",") if part.strip() != ""]
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"could not parse {what} as comma-separated rationals: {text!r}")


def _parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("..")
        return int(a), int(b)
    except ValueError:
        raise ValueError(f"range must look like A..B, got {text!r}")


def _point_and_vector(sphere: int, point_text: str, vector_text: str, what: str):
    point = rational_sphere_point(sphere, _parse_rationals(point_text, "--point"))
    level = SPHERE_LEVEL[sphere]
    ambient_dim = (1 << level) - 1
    comps = _parse_rationals(vector_text, what)
    if len(comps) != ambient_dim:
        raise ValueError(
            f"{what} needs {ambient_dim} ambient imaginary components for S^{sphere}, "
            f"got {len(comps)}"
        )
    vec = CDElement(level, tuple([Fraction(0)] + comps))
    return point, tangent_projection(point, vec)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acstk",
        description=(
            "Exact-rational computations around almost complex structures "
            "on spheres: doubling algebras, the cross-product J on S^2 and "
            "S^6, Nijenhuis tensors, L-polynomials and per-dimension "
            "classification certificates."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one dimension or a range")
    p.add_argument("n", nargs="?", type=int, help="sphere dimension")
    p.add_argument("--range", dest="range_", metavar="A..B", help="inclusive range of dimensions")
    p.add_argument("--json", action="store_true", help="emit verdicts as JSON")
    p.add_argument("--samples", type=int, default=25, help="sample count for the existence check")
    p.add_argument("--seed", type=int, default=None, help="sampling seed (default: ACSTK_SEED or 0)")

    p = sub.add_parser("lpoly", help="print the L-polynomials L_1..L_K exactly")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--latex", action="store_true")

    p = sub.add_parser("series", help="print power-series coefficients")
    p.add_argument("which", choices=["q"], help="series to print")
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("verify-j", help="sample-check J^2 = -Id on S^2 or S^6")
    p.add_argument("--sphere", type=int, choices=[2, 6], required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("nijenhuis", help="evaluate the Nijenhuis tensor at a rational point")
    p.add_argument("--sphere", type=int, choices=[2, 6], required=True)
    p.add_argument("--point", required=True, help="stereographic parameters q1,q2,...")
    p.add_argument("--u", required=True, help="ambient imaginary components, projected to the tangent space")
    p.add_argument("--v", required=True, help="ambient imaginary components, projected to the tangent space")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser(
        "assoc-compare",
        help="report <N(u,v), w> next to the associator [u,v,w] (no relation asserted)",
    )
    p.add_argument("--sphere", type=int, choices=[2, 6], required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bernoulli", help="print positive Bernoulli numbers B_1..B_K")
    p.add_argument("--k", type=int, required=True)

    return parser


def _cmd_classify(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    if (args.n is None) == (args.range_ is None):
        raise ValueError("classify needs exactly one of a dimension or --range A..B")
    if args.range_ is not None:
        a, b = _parse_range(args.range_)
        verdicts = classify_mod.classify_range(a, b, samples=args.samples, seed=seed)
    else:
        verdicts = [classify_mod.classify_sphere(args.n, samples=args.samples, seed=seed)]
    if args.json:
        payload = [v.as_dict() for v in verdicts]
        print(json.dumps(payload[0] if args.range_ is None else payload, indent=2, sort_keys=True))
        return 0
    for v in verdicts:
        if v.status == classify_mod.STATUS_EXISTS:
            print(f"S^{v.n}: exists ({v.reason})")
        else:
            witness = _verdict_witness(v)
            print(f"S^{v.n}: ruled out ({v.reason}{witness})")
    return 0


def _verdict_witness(v) -> str:
    cert = v.certificate
    if v.reason == classify_mod.REASON_PONTRYAGIN_EULER:
        w1 = cert["pontryagin_euler"]["witness"]
        w2 = cert["signature"]["witness"]
        return f", pairing {w1}, forced signature {w2}"
    if v.reason == classify_mod.REASON_CHERN_DIVISIBILITY:
        return f", {cert['integrality_requires']} fails"
    return ""


def _cmd_lpoly(args) -> int:
    if args.k < 1:
        raise ValueError("--k must be at least 1")
    for k in range(1, args.k + 1):
        poly = l_polynomial(k)
        print(f"L_{k} = {poly.latex() if args.latex else poly}")
    return 0


def _cmd_series(args) -> int:
    if args.order < 0:
        raise ValueError("--order must be non-negative")
    q = q_series(args.order)
    for k in range(args.order + 1):
        print(f"z^{k}: {q.coefficient(k)}")
    return 0


def _cmd_verify_j(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    report = verify_j_structure(args.sphere, samples=args.samples, seed=seed)
    if args.json:
        print(json.dumps(report.as_dict(), indent=2, sort_keys=True))
    else:
        status = "ok" if report.all_passed else "FAILED"
        print(
            f"S^{args.sphere}: {args.samples} samples, seed {seed}: "
            f"J^2 = -Id, tangency and isometry all exact -> {status}"
        )
    if not report.all_passed:
        raise InternalInvariantError("sampled J verification failed")
    return 0


def _cmd_nijenhuis(args) -> int:
    point, u = _point_and_vector(args.sphere, args.point, args.u, "--u")
    _, v = _point_and_vector(args.sphere, args.point, args.v, "--v")
    value = nijenhuis(point, u, v)
    payload = {
        "sphere": args.sphere,
        "point": point.as_dict(),
        "u": u.as_dict(),
        "v": v.as_dict(),
        "nijenhuis": value.as_dict(),
        "is_zero": not value,
    }
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"p = {point.vector}")
        print(f"u = {u.vector}")
        print(f"v = {v.vector}")
        print(f"N(u, v) = {value}")
    return 0


def _cmd_assoc_compare(args) -> int:
    point, u = _point_and_vector(args.sphere, args.point, args.u, "--u")
    _, v = _point_and_vector(args.sphere, args.point, args.v, "--v")
    _, w = _point_and_vector(args.sphere, args.point, args.w, "--w")
    report = compare_nijenhuis_associator(point, u, v, w)
    if args.json:
        print(json.dumps(report.as_dict(), indent=2, sort_keys=True))
    else:
        print(f"<N(u,v), w>    = {report.pairing_with_w}")
        print(f"[u, v, w]      = {report.associator_value}")
        print(f"Re [u, v, w]   = {report.associator_real_part}")
        print(f"ratio          = {report.ratio if report.ratio is not None else 'n/a'}")
    return 0


def _cmd_bernoulli(args) -> int:
    if args.k < 1:
        raise ValueError("--k must be at least 1")
    for k in range(1, args.k + 1):
        print(f"B_{k} = {bernoulli(k)}")
    return 0


_COMMANDS = {
    "classify": _cmd_classify,
    "lpoly": _cmd_lpoly,
    "series": _cmd_series,
    "verify-j": _cmd_verify_j,
    "nijenhuis": _cmd_nijenhuis,
    "assoc-compare": _cmd_assoc_compare,
    "bernoulli": _cmd_bernoulli,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InternalInvariantError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
