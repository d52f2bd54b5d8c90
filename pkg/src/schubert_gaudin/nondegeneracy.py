"""T/Z splitting, non-degeneracy, the generating and master functions, Bethe equations."""

from __future__ import annotations

from contextlib import nullcontext
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .config import get_config, working_precision
from .exact_algebra import (
    Polynomial,
    X,
    discriminant,
    gaussian_roots,
    is_exact,
    resultant,
    to_mp,
)
from .partitions import Partition, alpha_pairing
from .schubert import (
    MARKED_POINTS,
    PlaneBasis,
    SchubertFrame,
    SchubertProblem,
    intermediate_wronskians,
    schubert_frame,
)

__all__ = [
    "TZSplit",
    "BetheCoordinates",
    "NondegeneracyReport",
    "split_tz",
    "relative_discriminant",
    "relative_resultant",
    "t_polynomials",
    "is_nondegenerate",
    "bethe_coordinates",
    "master_function_value",
    "generating_function_value",
    "bethe_residuals",
    "max_abs",
]


@dataclass(frozen=True)
class TZSplit:
    T: Polynomial
    Z: Polynomial
    lc: object


def split_tz(f: Polynomial, marked=MARKED_POINTS) -> TZSplit:
    if not f:
        raise ValueError("cannot split the zero polynomial")
    T = f.monic()
    Z = Polynomial((1,))
    for z in marked:
        lin = X - z
        while T.degree > 0 and T(z) == 0:
            T = T / lin
            Z = Z * lin
    return TZSplit(T, Z, f.lc)


def _disc(f: Polynomial):
    return Fraction(1) if f.degree <= 1 else discriminant(f)


def relative_discriminant(f: Polynomial, marked=MARKED_POINTS):
    """``Delta(T) Res(Z, T)^2``."""
    s = split_tz(f, marked)
    return _disc(s.T) * resultant(s.Z, s.T) ** 2


def relative_resultant(f1: Polynomial, f2: Polynomial, marked=MARKED_POINTS):
    """``Res(T1, T2) Res(T1, Z2) Res(T2, Z1)``."""
    a, b = split_tz(f1, marked), split_tz(f2, marked)
    return resultant(a.T, b.T) * resultant(a.T, b.Z) * resultant(b.T, a.Z)


def t_polynomials(V: PlaneBasis, frame: SchubertFrame) -> tuple[Polynomial, ...]:
    """``T_1..T_N`` with ``T_{N+1-i} = W_i / Z_i`` (monic ``W_i``)."""
    N = frame.N
    if V.N != N or V.d != frame.problem.d:
        raise ValueError("frame mismatch: plane and problem have different N or d")
    monic = intermediate_wronskians(V).monic
    Ts = [None] * N
    for i in range(1, N + 1):
        try:
            T = monic[i - 1] / frame.z_polys[i - 1]
        except ArithmeticError:
            raise ValueError(f"frame mismatch: Z_{i} does not divide W_{i}") from None
        if T.degree != frame.t_degrees[N - i]:
            raise ValueError(
                f"frame mismatch: deg T_{N + 1 - i} = {T.degree}, expected {frame.t_degrees[N - i]}"
            )
        Ts[N - i] = T
    return tuple(Ts)


@dataclass
class NondegeneracyReport:
    T: tuple[Polynomial, ...]
    nonvanishing: list[bool]
    squarefree: list[bool]
    coprime: list[bool]  # Res(T_i, T_{i+1}) != 0 for i = 1..N-1

    @property
    def nondegenerate(self) -> bool:
        return all(self.nonvanishing) and all(self.squarefree) and all(self.coprime)


def is_nondegenerate(V: PlaneBasis, p: SchubertProblem) -> NondegeneracyReport:
    frame = schubert_frame(p)
    Ts = t_polynomials(V, frame)
    nonvanishing = [all(T(z) != 0 for z in MARKED_POINTS) for T in Ts]
    squarefree = [_disc(T) != 0 for T in Ts]
    coprime = [resultant(Ts[i], Ts[i + 1]) != 0 for i in range(len(Ts) - 1)]
    return NondegeneracyReport(Ts, nonvanishing, squarefree, coprime)


@dataclass(frozen=True)
class BetheCoordinates:
    """Coordinates ``t(i)``, one tuple per simple root, with the two finite weights."""

    t: tuple[tuple, ...]
    weights: tuple[Partition, Partition]
    marked_points: tuple = MARKED_POINTS

    def __post_init__(self):
        object.__setattr__(self, "t", tuple(tuple(b) for b in self.t))
        if len(self.t) != self.weights[0].N:
            raise ValueError("need one coordinate block per simple root")

    @property
    def N(self) -> int:
        return len(self.t)

    @property
    def k(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.t)

    def is_exact(self) -> bool:
        return all(is_exact(v) for b in self.t for v in b)

    def numeric(self) -> "BetheCoordinates":
        with working_precision():
            t = tuple(tuple(mpmath.mpc(to_mp(v)) for v in b) for b in self.t)
            zs = tuple(mpmath.mpc(to_mp(z)) for z in self.marked_points)
        return BetheCoordinates(t, self.weights, zs)

    def replace(self, i: int, l: int, value) -> "BetheCoordinates":
        """Copy with ``t_l(i)`` (0-based block and slot) replaced."""
        t = [list(b) for b in self.t]
        t[i][l] = value
        return BetheCoordinates(t, self.weights, self.marked_points)


def bethe_coordinates(V: PlaneBasis, p: SchubertProblem) -> BetheCoordinates:
    """Roots of the T-polynomials as Bethe coordinates.

    Exact in Q(i) when every root is Gaussian-rational, otherwise all
    coordinates are high-precision complex numbers.
    """
    Ts = t_polynomials(V, schubert_frame(p))
    blocks, exact = [], True
    for T in Ts:
        if T.degree == 0:
            blocks.append(())
            continue
        rs = gaussian_roots(T)
        exact = exact and rs.complete
        blocks.append(rs)
    if exact:
        t = [b if b == () else tuple(b.all_roots()) for b in blocks]
        return BetheCoordinates(t, (p.a, p.special))
    with working_precision():
        t = [b if b == () else tuple(mpmath.mpc(to_mp(r)) for r in b.all_roots()) for b in blocks]
    return BetheCoordinates(t, (p.a, p.special)).numeric()


def _prepared(bc: BetheCoordinates):
    if bc.is_exact() and all(is_exact(z) for z in bc.marked_points):
        return bc, False
    return bc.numeric(), True


def master_function_value(bc: BetheCoordinates):
    """Psi(t); zero when a factor with positive exponent vanishes."""
    bc, numeric = _prepared(bc)
    ctx = working_precision() if numeric else nullcontext()
    with ctx:
        val = Fraction(1) if not numeric else mpmath.mpc(1)
        N, t, zs = bc.N, bc.t, bc.marked_points
        for i in range(1, N + 1):
            for j, z in enumerate(zs):
                e = -alpha_pairing(bc.weights[j], i)
                for x in t[i - 1]:
                    val = val * _power(x - z, e, f"t({i}) hits z_{j + 1}")
            blk = t[i - 1]
            for l in range(len(blk)):
                for s in range(l + 1, len(blk)):
                    val = val * (blk[l] - blk[s]) ** 2
        for i in range(1, N):
            for x in t[i - 1]:
                for y in t[i]:
                    val = val * _power(x - y, -1, f"t({i}) meets t({i + 1})")
    return val


def _power(base, e, what):
    if e >= 0:
        return base**e
    if base == 0:
        raise ZeroDivisionError(f"master function undefined: {what}")
    return 1 / base ** (-e)


def generating_function_value(Ts, p: SchubertProblem):
    """Phi from monic ``W_i = T_{N+1-i} Z_i`` via relative discriminants and resultants."""
    fr = schubert_frame(p)
    N = fr.N
    Ts = tuple(Ts)
    if len(Ts) != N:
        raise ValueError(f"expected {N} T-polynomials")
    for idx, T in enumerate(Ts):
        if T.degree != fr.t_degrees[idx]:
            raise ValueError(
                f"degree mismatch: deg T_{idx + 1} = {T.degree}, frame wants {fr.t_degrees[idx]}"
            )
    W = [Ts[N - i].monic() * fr.z_polys[i - 1] for i in range(1, N + 1)]
    W.append(fr.z_polys[N])
    num = Fraction(1)
    for i in range(N):
        num = num * relative_discriminant(W[i])
    den = Fraction(1)
    for i in range(N):
        den = den * relative_resultant(W[i], W[i + 1])
    if den == 0:
        raise ZeroDivisionError("generating function undefined: neighbouring T share a root")
    return num / den


def bethe_residuals(bc: BetheCoordinates) -> list[list]:
    """Left-hand sides of the Bethe equations, indexed ``[i-1][l-1]``."""
    bc, numeric = _prepared(bc)
    ctx = working_precision() if numeric else nullcontext()
    out = []
    with ctx:
        N, t, zs = bc.N, bc.t, bc.marked_points
        for i in range(1, N + 1):
            row = []
            for l, x in enumerate(t[i - 1]):
                r = Fraction(0)
                for j, z in enumerate(zs):
                    c = alpha_pairing(bc.weights[j], i)
                    if c:
                        r = r - c / _nonzero(x - z, f"t_{l + 1}({i}) = z_{j + 1}")
                for s, y in enumerate(t[i - 1]):
                    if s != l:
                        r = r + 2 / _nonzero(x - y, f"t({i}) has a repeated coordinate")
                for nb in (i - 1, i + 1):
                    if 1 <= nb <= N:
                        for y in t[nb - 1]:
                            r = r - 1 / _nonzero(x - y, f"t({i}) meets t({nb})")
                row.append(r)
            out.append(row)
    return out


def _nonzero(v, what):
    if v == 0:
        raise ZeroDivisionError(f"coincident coordinates: {what}")
    return v


def max_abs(residuals) -> object:
    """Largest absolute residual; exact zero stays ``Fraction(0)``."""
    flat = [v for row in residuals for v in row]
    if all(is_exact(v) for v in flat):
        if all(v == 0 for v in flat):
            return Fraction(0)
    with working_precision():
        return max((abs(to_mp(v)) for v in flat), default=mpmath.mpf(0))


def residual_tolerance():
    return get_config().residual_tol
