"""The single plane of a special Schubert intersection.

Two constructions are provided: spans of truncated binomials (the case
m = d - N) and the general procedure that solves a binomial linear system
for the polynomial of order m+N at -1 and splits it into monomial blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod

from .exact_algebra import INFINITY, Polynomial, X, bareiss_det, solve_fraction_free
from .partitions import Partition
from .schubert import (
    MARKED_POINTS,
    PlaneBasis,
    SchubertFrame,
    SchubertProblem,
    cell_partition,
    schubert_frame,
)

__all__ = [
    "SpecialBasisResult",
    "truncated_binomial",
    "truncated_basis",
    "construct_special_basis",
    "binomial_matrix",
    "direct_determinant",
    "closed_form_magnitude",
    "closed_form_determinant",
    "reduction_determinant",
    "check_cells",
]


@dataclass(frozen=True)
class SpecialBasisResult:
    plane: PlaneBasis
    constants: tuple[Fraction, ...]
    index_set: tuple[int, ...]
    master_poly: Polynomial
    frame: SchubertFrame

    def to_json(self) -> dict:
        from .serialization import encode_polynomial, encode_scalar

        return {
            "constants": [encode_scalar(c) for c in self.constants],
            "index_set": list(self.index_set),
            "master_poly": encode_polynomial(self.master_poly),
            "plane": [encode_polynomial(q) for q in self.plane.basis],
        }


def truncated_binomial(m: int, d: int) -> Polynomial:
    """``1 + d x + ... + C(d, m) x^m``."""
    if not 0 <= m <= d:
        raise ValueError(f"truncated binomial needs 0 <= m <= d, got m={m}, d={d}")
    return Polynomial([comb(d, k) for k in range(m + 1)])


def check_cells(V: PlaneBasis, p: SchubertProblem) -> None:
    """Raise AssertionError unless V lies in the three prescribed cells."""
    expected = {MARKED_POINTS[0]: p.a, MARKED_POINTS[1]: p.special, INFINITY: p.w}
    for xi, want in expected.items():
        got = cell_partition(V, xi)
        if got != want:
            raise AssertionError(f"cell at {xi}: expected {want}, got {got}")


def truncated_basis(ms, d: int) -> tuple[PlaneBasis, SchubertProblem]:
    ms = tuple(int(v) for v in ms)
    N = len(ms)
    if N < 1:
        raise ValueError("need at least one truncated binomial")
    if any(ms[i] >= ms[i + 1] for i in range(N - 1)):
        raise ValueError(f"ms must be strictly increasing, got {ms}")
    if ms[0] < 0 or ms[-1] >= d:
        raise ValueError(f"ms must lie in [0, d) with d={d}")
    a = Partition(tuple(ms[N - l] - (N - l) for l in range(1, N + 1)))
    w = Partition(tuple(d - ms[l - 1] - (N + 1 - l) for l in range(1, N + 1)))
    p = SchubertProblem(N, d, a, w, d - N)
    V = PlaneBasis([truncated_binomial(k, d) for k in ms] + [(X + 1) ** d], N, d)
    check_cells(V, p)
    return V, p


def construct_special_basis(p: SchubertProblem) -> SpecialBasisResult:
    fr = schubert_frame(p)
    N, d, m = p.N, p.d, p.m
    L = fr.index_set
    K = d - m - N
    if len(L) != K:
        raise AssertionError(f"index set has {len(L)} entries, expected {K}")
    base = m + N
    if K:
        A = [[comb(base + j, l) for j in range(1, K + 1)] for l in L]
        rhs = [-comb(base, l) for l in L]
        C = tuple(solve_fraction_free(A, rhs))
    else:
        C = ()
    coeffs = [Fraction(0)] * (d + 1)
    for j, c in enumerate((Fraction(1),) + C):
        for k in range(base + j + 1):
            coeffs[k] += c * comb(base + j, k)
    P = Polynomial(coeffs)
    if any(P[l] for l in L):
        raise AssertionError("master polynomial has a nonzero coefficient in the index set")

    Q = []
    for lo, hi in fr.blocks():
        if P[lo] == 0 or P[hi] == 0:
            raise AssertionError(f"splitting degenerate: block [{lo}, {hi}] of {P}")
        Q.append(Polynomial([0] * lo + [P[k] for k in range(lo, hi + 1)]))
    V = PlaneBasis(Q, N, d)
    check_cells(V, p)
    return SpecialBasisResult(V, C, L, P, fr)


def binomial_matrix(d: int, L) -> list[list[int]]:
    """``A_ij = C(d+1-j, l_i)`` for ``1 <= i, j <= K``."""
    K = len(L)
    return [[comb(d + 1 - j, l) for j in range(1, K + 1)] for l in L]


def direct_determinant(d: int, L) -> int:
    if not L:
        return 1
    return int(bareiss_det(binomial_matrix(d, L), zero=0, one=1))


def closed_form_magnitude(d: int, L) -> Fraction:
    """``|det A| = prod C(d, l_i) prod_{i<j} |l_j - l_i| / prod_{i<K} (d+1-i)^(K-i)``."""
    K = len(L)
    num = prod(comb(d, l) for l in L) * prod(
        abs(L[j] - L[i]) for i in range(K) for j in range(i + 1, K)
    )
    den = prod((d + 1 - i) ** (K - i) for i in range(1, K))
    return Fraction(num, den)


def closed_form_determinant(d: int, m: int, N: int, L) -> Fraction:
    """Closed-form ``det A`` with its sign taken from the direct determinant."""
    L = tuple(L)
    K = d - m - N
    if K < 0:
        raise ValueError(f"K = d - m - N = {K} is negative")
    if len(L) != K:
        raise ValueError(f"index set has {len(L)} entries, expected K = {K}")
    if len(set(L)) != K:
        raise ValueError("index set entries must be distinct")
    mag = closed_form_magnitude(d, L)
    if mag == 0:
        return mag
    return mag if direct_determinant(d, L) > 0 else -mag


def _tilde_b(b) -> Fraction:
    K = len(b)
    if K == 1:
        return Fraction(1)
    factor = Fraction(
        (-1) ** K * factorial(K - 2) * prod(b[-1] - b[i] for i in range(K - 1)),
        prod(b) * prod(b[-1] + j for j in range(1, K - 1)),
    )
    return factor * _tilde_b([v + 1 for v in b[:-1]])


def reduction_determinant(d: int, L) -> Fraction:
    """``det A`` via row/column factoring, partial fractions and the recursion.

    Valid when every ``l_i <= d + 1 - K``.
    """
    K = len(L)
    if K == 0:
        return Fraction(1)
    if any(l > d + 1 - K or l < 0 for l in L):
        raise ValueError("reduction evaluator needs 0 <= l_i <= d + 1 - K")
    b = [d - l - K + 2 for l in L]
    pref = Fraction(
        prod(factorial(d + 1 - j) for j in range(1, K + 1)),
        prod(factorial(l) * factorial(d + 1 - K - l) for l in L),
    )
    sign = (-1) ** ((K - 1) * (K - 2) // 2)
    B = Fraction(sign, prod(factorial(i) for i in range(1, K - 1))) * _tilde_b(b)
    return pref * B
