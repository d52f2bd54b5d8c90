"""Fixture cases: expected values for known intersections and a diffing runner.

A fixture file is a JSON array of cases::

    {"name": ..., "problem": {...},
     "expected": {field: {"value": ..., "provenance": "printed" | "derived"}}}

Fields are compared against the intersection report after normalizing both
sides, so bases compare as subspaces, polynomials up to a constant factor
and root blocks as multisets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .exact_algebra import format_scalar, parse_scalar
from .pipeline import analyze
from .schubert import PlaneBasis, SchubertProblem
from .serialization import decode_polynomial

__all__ = [
    "FixtureError",
    "FixtureCase",
    "load_fixtures",
    "bundled_fixtures",
    "run_case",
    "run_fixtures",
]

PROVENANCES = ("printed", "derived")


class FixtureError(ValueError):
    """Malformed fixture file."""


@dataclass(frozen=True)
class FixtureCase:
    name: str
    problem: SchubertProblem
    expected: dict = field(default_factory=dict)  # field -> (value, provenance)

    @classmethod
    def from_json(cls, obj) -> "FixtureCase":
        try:
            name = str(obj["name"])
            problem = SchubertProblem.from_json(obj["problem"])
            expected = {}
            for key, entry in obj.get("expected", {}).items():
                prov = entry.get("provenance", "derived")
                if prov not in PROVENANCES:
                    raise FixtureError(f"{name}: unknown provenance {prov!r} for {key}")
                if key not in NORMALIZERS:
                    raise FixtureError(f"{name}: unknown expected field {key!r}")
                expected[key] = (entry["value"], prov)
        except FixtureError:
            raise
        except (KeyError, TypeError, AttributeError, ValueError) as exc:
            raise FixtureError(f"malformed fixture case: {exc}") from None
        return cls(name, problem, expected)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "problem": self.problem.to_json(),
            "expected": {k: {"value": v, "provenance": p} for k, (v, p) in self.expected.items()},
        }


def _poly_key(obj):
    p = decode_polynomial(obj)
    return [format_scalar(c) for c in p.monic().coeffs] if p else []


def _scalar_key(obj):
    return json.dumps(format_scalar(parse_scalar(obj)), sort_keys=True)


def _plane_key(polys, problem: SchubertProblem):
    V = PlaneBasis.of([decode_polynomial(q) for q in polys], problem.N, problem.d)
    return [[format_scalar(c) for c in row] for row in V.reduced_rows()]


def _roots_key(blocks, problem):
    return [sorted(_scalar_key(x) for x in block) for block in blocks]


def _poly_list_key(polys, problem):
    return [_poly_key(p) for p in polys]


def _scalar_list_key(xs, problem):
    return [_scalar_key(x) for x in xs]


def _plain(value, problem):
    return value


NORMALIZERS = {
    "plane": _plane_key,
    "wronskians": _poly_list_key,
    "T": _poly_list_key,
    "t_values": _roots_key,
    "constants": _scalar_list_key,
    "nondegenerate": _plain,
    "cell_partitions": _plain,
    "bethe_weight": _plain,
    "dual_partition": _plain,
    "empty": _plain,
}


def load_fixtures(path) -> list[FixtureCase]:
    """Parse a fixture file; raises FileNotFoundError or FixtureError."""
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FixtureError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(data, list):
        raise FixtureError(f"{path}: expected a JSON array of fixture cases")
    return [FixtureCase.from_json(obj) for obj in data]


def bundled_fixtures() -> list[FixtureCase]:
    ref = resources.files("schubert_gaudin") / "fixtures" / "examples.json"
    with resources.as_file(ref) as path:
        return load_fixtures(path)


def run_case(case: FixtureCase) -> list[str]:
    """Diff lines for every mismatching field; empty when the case passes."""
    report = analyze(case.problem).to_json()
    diffs = []
    for key, (value, prov) in sorted(case.expected.items()):
        norm = NORMALIZERS[key]
        if key not in report:
            diffs.append(f"{case.name}: {key} [{prov}]: missing from report")
            continue
        try:
            want = norm(value, case.problem)
        except (ValueError, TypeError, ArithmeticError) as exc:
            diffs.append(f"{case.name}: {key} [{prov}]: cannot read expected value: {exc}")
            continue
        got = norm(report[key], case.problem)
        if want != got:
            diffs.append(
                f"{case.name}: {key} [{prov}]:\n"
                f"  expected {json.dumps(want)}\n"
                f"  got      {json.dumps(got)}"
            )
    return diffs


def run_fixtures(cases) -> dict[str, list[str]]:
    return {case.name: run_case(case) for case in cases}
