"""Command line: intersect | truncated | survey | verify | weight-vector."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import get_config, set_config
from .exact_algebra import INFINITY
from .pipeline import analyze
from .schubert import MARKED_POINTS, SchubertProblem, cell_partition
from .serialization import dumps, encode_partition, encode_polynomial
from .special import truncated_basis
from .surveys import (
    common_roots_survey,
    determinant_survey,
    discriminant_survey,
    wronski_corollary_survey,
)
from .verify import FixtureError, bundled_fixtures, load_fixtures, run_fixtures

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _problem(args) -> SchubertProblem:
    if args.problem is not None:
        text = args.problem
        if text.startswith("@"):
            try:
                text = Path(text[1:]).read_text()
            except OSError as exc:
                raise UsageError(f"cannot read problem file: {exc}") from None
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"problem is not valid JSON: {exc}") from None
        if not isinstance(obj, dict):
            raise UsageError("problem JSON must be an object")
    else:
        missing = [k for k in ("N", "d", "a", "w", "m") if getattr(args, k) is None]
        if missing:
            raise UsageError("give --problem or all of --N --d --a --w --m (missing: " + ", ".join(missing) + ")")
        obj = {"N": args.N, "d": args.d, "a": args.a, "w": args.w, "m": args.m}
    try:
        return SchubertProblem.from_json(obj)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"invalid problem: {exc}") from None


def _add_problem_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--problem", help="problem as JSON, or @path to a JSON file")
    p.add_argument("--N", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--a", type=_int_list, help="partition at 0, e.g. 2,1")
    p.add_argument("--w", type=_int_list, help="partition at infinity")
    p.add_argument("--m", type=int, help="special partition (m) at -1")


def cmd_intersect(args):
    report = analyze(_problem(args), with_vector=args.vector).to_json()
    return report, EXIT_OK


def cmd_weight_vector(args):
    rep = analyze(_problem(args), with_vector=True)
    out = {"problem": rep.problem.to_json(), "empty": rep.empty}
    if not rep.empty:
        out["nondegenerate"] = rep.nondegeneracy.nondegenerate
        out["k"] = list(rep.special.frame.t_degrees)
        out["bethe_weight"] = encode_partition(rep.weight)
        if rep.vector is not None:
            out["bethe_vector"] = rep.vector.to_json()
    return out, EXIT_OK


def cmd_truncated(args):
    try:
        V, p = truncated_basis(args.ms, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    cells = {"0": cell_partition(V, MARKED_POINTS[0]), "-1": cell_partition(V, MARKED_POINTS[1])}
    cells["inf"] = cell_partition(V, INFINITY)
    out = {
        "ms": list(args.ms),
        "d": args.d,
        "problem": p.to_json(),
        "plane": [encode_polynomial(q) for q in V.basis],
        "wronskian": encode_polynomial(V.wronskian()),
        "cell_partitions": {k: encode_partition(v) for k, v in cells.items()},
    }
    return out, EXIT_OK


def cmd_survey(args):
    if args.kind == "discriminants":
        rep = discriminant_survey(args.d_max)
    elif args.kind == "common-roots":
        rep = common_roots_survey(args.d_max)
    elif args.kind == "wronski-corollary":
        if args.N is None:
            raise UsageError("wronski-corollary needs --N")
        rep = wronski_corollary_survey(args.N, args.d_max)
    else:
        rep = determinant_survey(args.count, args.seed, args.K_max, args.d_max)
    out = rep.to_json()
    out["seed"] = args.seed
    if rep.report_only and rep.failures:
        print(f"WARNING: {len(rep.failures)} counterexample(s) found in {rep.kind} survey", file=sys.stderr)
    return out, EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_verify(args):
    try:
        cases = load_fixtures(args.fixtures) if args.fixtures else bundled_fixtures()
    except FileNotFoundError:
        raise UsageError(f"fixture file not found: {args.fixtures}") from None
    except FixtureError as exc:
        raise UsageError(str(exc)) from None
    if not cases:
        print("warning: fixture list is empty", file=sys.stderr)
    diffs = run_fixtures(cases)
    for lines in diffs.values():
        for line in lines:
            print(line, file=sys.stderr)
    out = {
        "cases": len(cases),
        "results": {name: ("pass" if not d else "fail") for name, d in diffs.items()},
        "diffs": {name: d for name, d in diffs.items() if d},
    }
    return out, EXIT_MISMATCH if any(diffs.values()) else EXIT_OK


def _text(obj, indent: str = "") -> str:
    lines = []
    for key, value in obj.items():
        if isinstance(value, dict) and value and all(isinstance(v, (dict, list)) for v in value.values()):
            lines.append(f"{indent}{key}:")
            lines.append(_text(value, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {json.dumps(value, sort_keys=True)}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument(
        "--precision", type=int, default=argparse.SUPPRESS, help="mpmath working precision in bits"
    )
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized surveys")
    parser = argparse.ArgumentParser(
        prog="schubert-gaudin",
        description="Special Schubert intersections and Bethe vectors of the two-point Gaudin model.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    p = sub.add_parser("intersect", help="construct the plane and certify non-degeneracy")
    _add_problem_args(p)
    p.add_argument("--vector", action="store_true", help="also build the Bethe vector")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("weight-vector", help="Bethe vector of the intersection")
    _add_problem_args(p)
    p.set_defaults(func=cmd_weight_vector)

    p = sub.add_parser("truncated", help="plane spanned by truncated binomials")
    p.add_argument("--ms", type=_int_list, required=True, help="strictly increasing m_1,...,m_N")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_truncated)

    p = sub.add_parser("survey", help="range surveys")
    p.add_argument("kind", choices=("discriminants", "common-roots", "wronski-corollary", "determinant"))
    p.add_argument("--d-max", type=int, default=None)
    p.add_argument("--N", type=int)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--K-max", type=int, default=6)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("verify", help="check fixture cases")
    p.add_argument("fixtures", nargs="?", help="fixture JSON file (default: bundled examples)")
    p.set_defaults(func=cmd_verify)
    return parser


_GLOBAL_DEFAULTS = {"format": "json", "precision": 256, "seed": 0}
_D_MAX_DEFAULTS = {"discriminants": 25, "common-roots": 20, "wronski-corollary": 8, "determinant": 20}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for key, value in _GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    if args.precision < 53:
        parser.error("--precision must be at least 53 bits")
    if getattr(args, "kind", None) and args.d_max is None:
        args.d_max = _D_MAX_DEFAULTS[args.kind]
    prev = get_config().precision_bits
    set_config(precision_bits=args.precision)
    try:
        out, code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        set_config(precision_bits=prev)
    print(dumps(out) if args.format == "json" else _text(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
