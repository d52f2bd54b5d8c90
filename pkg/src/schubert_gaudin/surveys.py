"""Range surveys over truncated binomials, Wronskians and binomial determinants."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .exact_algebra import X, discriminant, resultant
from .special import (
    closed_form_determinant,
    direct_determinant,
    truncated_basis,
    truncated_binomial,
)

__all__ = [
    "SurveyReport",
    "discriminant_survey",
    "common_roots_survey",
    "wronski_corollary_survey",
    "determinant_survey",
    "increasing_sequences",
]


@dataclass
class SurveyReport:
    kind: str
    params: dict
    total: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)
    report_only: bool = False  # failures are evidence, not errors

    @property
    def ok(self) -> bool:
        return self.report_only or not self.failures

    def record(self, good: bool, case: dict) -> None:
        self.total += 1
        if good:
            self.passed += 1
        else:
            self.failures.append(case)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params,
            "total": self.total,
            "passed": self.passed,
            "failed": len(self.failures),
            "failures": self.failures,
            "report_only": self.report_only,
            "ok": self.ok,
        }


def discriminant_survey(d_max: int) -> SurveyReport:
    """Squarefreeness of every truncated binomial P_{k;d}, 0 < k < d <= d_max."""
    rep = SurveyReport("discriminants", {"d_max": d_max})
    for d in range(2, d_max + 1):
        for k in range(1, d):
            P = truncated_binomial(k, d)
            rep.record(discriminant(P) != 0, {"k": k, "d": d})
    return rep


def common_roots_survey(d_max: int) -> SurveyReport:
    """Res(P_{k;d}, P_{m;d}) != 0 for 0 < k < m < d <= d_max; evidence only."""
    rep = SurveyReport("common-roots", {"d_max": d_max}, report_only=True)
    for d in range(3, d_max + 1):
        Ps = [truncated_binomial(k, d) for k in range(d)]
        for k, m in combinations(range(1, d), 2):
            rep.record(resultant(Ps[k], Ps[m]) != 0, {"k": k, "m": m, "d": d})
    return rep


def increasing_sequences(N: int, d: int):
    """All ``0 <= m_1 < ... < m_N < d``."""
    return combinations(range(d), N)


def wronski_corollary_survey(N: int, d_max: int) -> SurveyReport:
    """Monic Wronskian of every truncated basis is ``x^(sum m - N(N-1)/2) (x+1)^(d-N)``."""
    rep = SurveyReport("wronski-corollary", {"N": N, "d_max": d_max})
    for d in range(N + 1, d_max + 1):
        for ms in increasing_sequences(N, d):
            case = {"ms": list(ms), "d": d}
            try:
                V, _ = truncated_basis(ms, d)
            except AssertionError as exc:
                rep.record(False, {**case, "error": str(exc)})
                continue
            want = X ** (sum(ms) - N * (N - 1) // 2) * (X + 1) ** (d - N)
            rep.record(V.wronskian() == want, case)
    return rep


def determinant_survey(count: int, seed: int, K_max: int = 6, d_max: int = 20) -> SurveyReport:
    """Closed-form magnitude vs. direct determinant on random distinct index sets."""
    rng = random.Random(seed)
    rep = SurveyReport("determinant", {"count": count, "seed": seed, "K_max": K_max, "d_max": d_max})
    for _ in range(count):
        K = rng.randint(1, K_max)
        d = rng.randint(K, d_max)
        L = sorted(rng.sample(range(d + 1), K))
        direct = direct_determinant(d, L)
        closed = closed_form_determinant(d, d - K, 0, L)
        case = {"d": d, "L": L, "direct": str(direct), "closed": str(closed)}
        rep.record(abs(closed) == abs(direct) and direct != 0, case)
    return rep
