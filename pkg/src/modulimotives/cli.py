"""Command-line front end.

Subcommands compute motivic classes of the supported moduli spaces and render
them as a canonical JSON class, a Poincare polynomial, or a Hodge-number
matrix; ``verify`` runs the cross-checking sweeps.  Identical invocations
produce byte-identical output.

Exit codes: 0 success, 1 verification failure, 2 usage or hypothesis error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bundles import BundleSpec, InvalidDegree, bundle_motive, bundle_motive_fixed_det
from .higgs import ChamberMismatch, HiggsSpec, higgs_motive, higgs_motive_mod_jac
from .motive import MotiveClass
from .pairs import (
    ChamberSpec,
    HypothesisViolation,
    InvalidChamber,
    OnWall,
    OutOfRange,
    chamber_of,
    pair_motive_flip,
    pair_motive_geo,
    pair_motive_sym,
)
from .verify import SUITES, run_suite

FORMATS = ("class-json", "poincare", "diamond-text", "diamond-json")

_USAGE_ERRORS = (
    InvalidChamber,
    HypothesisViolation,
    OnWall,
    OutOfRange,
    InvalidDegree,
    ChamberMismatch,
    ValueError,
)


def render_class(cls: MotiveClass, fmt: str) -> str:
    if fmt == "class-json":
        return json.dumps(cls.to_json_dict())
    if fmt == "poincare":
        return cls.poincare_polynomial().to_str("t")
    matrix = cls.hodge_realization().to_matrix()
    if fmt == "diamond-text":
        return "\n".join(" ".join(str(c) for c in row) for row in matrix)
    if fmt == "diamond-json":
        return json.dumps(
            {"genus": cls.genus, "rows_are_p": True, "matrix": matrix}
        )
    raise ValueError(f"unknown format {fmt!r}")


def _add_format_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default="diamond-text",
        help="output format (default: diamond-text)",
    )


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(
            f"expected an exact rational like 3/2, got {text!r}"
        ) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modulimotives",
        description=(
            "Exact motivic classes and Hodge diamonds of moduli spaces of "
            "rank-3 bundles, rank-2 pairs and rank-3 Higgs bundles on a curve."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bundles = sub.add_parser(
        "bundles", help="moduli of semistable rank-3 bundles of coprime degree"
    )
    p_bundles.add_argument("--genus", type=int, required=True)
    p_bundles.add_argument("--degree", type=int, required=True)
    p_bundles.add_argument(
        "--fixed-det",
        action="store_true",
        help="fixed-determinant moduli space instead of varying determinant",
    )
    _add_format_flag(p_bundles)

    p_pairs = sub.add_parser(
        "pairs", help="moduli of rank-2 pairs in a given stability chamber"
    )
    p_pairs.add_argument("--genus", type=int, required=True)
    p_pairs.add_argument("--e", type=int, required=True, help="pair degree")
    which = p_pairs.add_mutually_exclusive_group(required=True)
    which.add_argument("--chamber", type=int, help="chamber index i")
    which.add_argument(
        "--sigma",
        type=_parse_rational,
        help="exact rational stability parameter, e.g. 3/4 (never a float)",
    )
    p_pairs.add_argument(
        "--method",
        choices=("flip", "sym", "geo"),
        default="flip",
        help="formula route (default: flip, the wall-crossing recursion)",
    )
    _add_format_flag(p_pairs)

    p_higgs = sub.add_parser(
        "higgs", help="moduli of rank-3 Higgs bundles of coprime degree"
    )
    p_higgs.add_argument("--genus", type=int, required=True)
    p_higgs.add_argument("--degree", type=int, required=True)
    p_higgs.add_argument(
        "--mod-jac",
        action="store_true",
        help="the cofactor of the Jacobian class instead of the full class",
    )
    _add_format_flag(p_higgs)

    p_verify = sub.add_parser("verify", help="run the cross-checking sweeps")
    p_verify.add_argument("--suite", choices=sorted(SUITES), required=True)
    p_verify.add_argument("--max-genus", type=int, default=4)

    return parser


def _cmd_bundles(args: argparse.Namespace) -> int:
    spec = BundleSpec(args.genus, args.degree)
    cls = bundle_motive_fixed_det(spec) if args.fixed_det else bundle_motive(spec)
    print(render_class(cls, args.format))
    return 0


def _cmd_pairs(args: argparse.Namespace) -> int:
    if args.chamber is not None:
        index = args.chamber
    else:
        index = chamber_of(args.sigma, args.e)
    spec = ChamberSpec(g=args.genus, e=args.e, i=index)
    route = {
        "flip": pair_motive_flip,
        "sym": pair_motive_sym,
        "geo": pair_motive_geo,
    }[args.method]
    print(render_class(route(spec), args.format))
    return 0


def _cmd_higgs(args: argparse.Namespace) -> int:
    spec = HiggsSpec(args.genus, args.degree)
    cls = higgs_motive_mod_jac(spec) if args.mod_jac else higgs_motive(spec)
    print(render_class(cls, args.format))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.suite, args.max_genus)
    for result in results:
        print(result.render())
    return 0 if all(r.passed for r in results) else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "bundles": _cmd_bundles,
        "pairs": _cmd_pairs,
        "higgs": _cmd_higgs,
        "verify": _cmd_verify,
    }[args.command]
    try:
        return handler(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
