"""Command-line interface.

Exit codes: 0 success, 2 parse error, 3 disagreement or counterexample,
4 generation failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import polyfile
from .bench import run_bench
from .convexity import (
    is_locally_ordinary,
    is_locally_simple,
    is_locally_strict,
    is_ordinary,
    is_simply_convex,
    is_strictly_convex_angles,
    is_strictly_convex_signs,
    monotone_or_none,
    property_report,
)
from .errors import GenerationFailed, ParseError
from .fuzz import run_fuzz, decider_disagreements
from .gen import KINDS, GenSpec
from .geom import Polygon, dim

EXIT_OK, EXIT_PARSE, EXIT_DISAGREE, EXIT_GEN = 0, 2, 3, 4

MONOTONE_KEYS = (
    "increasing", "decreasing", "nondecreasing", "nonincreasing",
    "c_increasing", "c_decreasing", "c_nondecreasing", "c_nonincreasing",
    "c_strictly_monotone", "c_monotone",
)


def default_seed() -> int:
    return int(os.environ.get("POLYCONVEX_SEED", "0"))


def classify_result(poly: Polygon, with_oracle: bool = False) -> dict:
    """The classification document printed by ``classify``; keys are fixed.

    Without the oracle, the super-linear properties are reported as None.
    """
    n = len(poly)
    mc = monotone_or_none(poly)
    rep = property_report(poly) if with_oracle else None
    signs = is_strictly_convex_signs(poly)
    angle = is_strictly_convex_angles(poly)
    result = {
        "n": n,
        "dim": dim(poly),
        "properties": {
            "locally_ordinary": is_locally_ordinary(poly),
            "ordinary": is_ordinary(poly),
            "locally_strict": is_locally_strict(poly),
            "quasi_strict": rep.quasi_strict if rep else None,
            "strict": rep.strict if rep else None,
            "locally_simple": is_locally_simple(poly),
            "simple": rep.simple if rep else None,
            "convex": rep.convex if rep else None,
        },
        "monotone": {k: getattr(mc, k) for k in MONOTONE_KEYS} if mc else None,
        "strictly_convex": {
            "signs": signs,
            "angles": angle,
            "oracle": (rep.strict and rep.convex) if rep else None,
        },
        "simply_convex": {
            "angles": is_simply_convex(poly) if n >= 3 else None,
            "oracle": (rep.simple and rep.convex) if rep else None,
        },
        "disagreements": decider_disagreements(poly, rep, signs, angle) if rep else [],
    }
    return result


def _flatten(d, prefix=""):
    for k, v in d.items():
        if isinstance(v, dict):
            yield from _flatten(v, f"{prefix}{k}.")
        else:
            yield f"{prefix}{k}", v


def _text(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return ", ".join(v) if v else "none"
    return str(v)


def cmd_classify(args, out) -> int:
    try:
        poly = polyfile.load(args.file)
    except ParseError as exc:
        print(f"parse error: {args.file}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    result = classify_result(poly, with_oracle=args.oracle)
    if args.json:
        out.write(json.dumps(result, indent=2) + "\n")
    else:
        for key, value in _flatten(result):
            out.write(f"{key}: {_text(value)}\n")
    if result["disagreements"]:
        print("DISAGREEMENT: " + ", ".join(result["disagreements"]), file=out)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_gen(args, out) -> int:
    seed = default_seed() if args.seed is None else args.seed
    try:
        spec = GenSpec(args.kind, args.n, seed, args.bound)
        poly = spec.generate()
    except GenerationFailed as exc:
        print(f"generation failed: {exc}", file=sys.stderr)
        return EXIT_GEN
    text = polyfile.dumps(poly, header=f"polyconvex gen {spec.describe()}")
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.write(spec.describe() + "\n")
    else:
        out.write(text)
        print(spec.describe(), file=sys.stderr)
    return EXIT_OK


def cmd_bench(args, out) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    seed = default_seed() if args.seed is None else args.seed
    result = run_bench(sizes, args.repeats, seed=seed, hull_max_n=args.hull_max_n)
    out.write(result.table() + "\n")
    return EXIT_OK if result.agree() else EXIT_DISAGREE


def cmd_fuzz(args, out) -> int:
    seed = default_seed() if args.seed is None else args.seed
    report = run_fuzz(args.iters, seed, max_n=args.max_n, bound=args.bound)
    out.write(report.summary() + "\n")
    if report.ok:
        return EXIT_OK
    text = polyfile.dumps(report.counterexample, header="counterexample: " + ", ".join(report.counterexample_failures))
    out.write(text)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyconvex", description="Exact polygon convexity tests.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="report every property of a polygon file")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force oracles and cross-check")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gen", help="write a generated polygon file")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None, help="default: $POLYCONVEX_SEED or 0")
    p.add_argument("--bound", type=int, default=None, help="coordinate bound (default depends on kind and n)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the deciders on growing strictly convex polygons")
    p.add_argument("--sizes", default="100000,200000,400000,800000")
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--hull-max-n", type=int, default=200_000, help="skip the hull oracle above this size")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("fuzz", help="differential fuzzing against the oracles")
    p.add_argument("--iters", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("-o", "--output", default=None, help="also write the counterexample here")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
