"""Schubert cells for osculating flags of the rational normal curve.

Planes are (N+1)-dimensional subspaces of Poly_d.  A plane's cell at a
point is read off from its order spectrum there; the special intersections
handled here have marked points 0 and -1 plus infinity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .config import get_config, working_precision
from .exact_algebra import (
    INFINITY,
    Polynomial,
    X,
    gaussian_roots,
    is_exact,
    is_infinity,
    poly_gcd,
    rref,
    to_mp,
    wronskian,
)
from .partitions import Partition, partitions_in_box, special_partition

__all__ = [
    "MARKED_POINTS",
    "EmptyIntersection",
    "DegenerateBasis",
    "SchubertProblem",
    "SchubertFrame",
    "PlaneBasis",
    "WronskianFlag",
    "order_spectrum",
    "partition_from_orders",
    "cell_partition",
    "expected_wronskian",
    "frame_data",
    "schubert_frame",
    "pieri_count",
    "special_problems",
    "degree_echelon",
    "intermediate_wronskians",
    "singular_points",
]

MARKED_POINTS = (Fraction(0), Fraction(-1))


class EmptyIntersection(Exception):
    """The degree/order interlacing fails, so the intersection is empty."""


class DegenerateBasis(ValueError):
    """Dependent basis, a base point, or degrees outside Poly_d."""


@dataclass(frozen=True)
class SchubertProblem:
    """Omega_a(0) ∩ Omega_(m)(-1) ∩ Omega_w(inf) in Gr_{N+1}(Poly_d)."""

    N: int
    d: int
    a: Partition
    w: Partition
    m: int

    def __post_init__(self):
        if not isinstance(self.a, Partition):
            object.__setattr__(self, "a", Partition(tuple(self.a)))
        if not isinstance(self.w, Partition):
            object.__setattr__(self, "w", Partition(tuple(self.w)))
        N, d = self.N, self.d
        if N < 1:
            raise ValueError("rank N must be at least 1")
        if d <= N:
            raise ValueError(f"ambient degree d={d} must exceed N={N}")
        if self.a.N != N or self.w.N != N:
            raise ValueError("partitions a and w must have N entries")
        box = d - N
        if self.a.entry(1) > box or self.w.entry(1) > box:
            raise ValueError(f"partition entries must not exceed d - N = {box}")
        if not 0 <= self.m <= box:
            raise ValueError(f"special part m={self.m} must lie in [0, {box}]")
        if self.a.size + self.w.size + self.m != self.dimension:
            raise ValueError(
                f"codimensions {self.a.size}+{self.w.size}+{self.m} "
                f"!= dim Gr = {self.dimension}"
            )

    @property
    def dimension(self) -> int:
        return (self.N + 1) * (self.d - self.N)

    @property
    def special(self) -> Partition:
        return special_partition(self.m, self.N)

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "d": self.d,
            "a": list(self.a.entries),
            "w": list(self.w.entries),
            "m": self.m,
        }

    @classmethod
    def from_json(cls, obj) -> "SchubertProblem":
        try:
            return cls(
                N=int(obj["N"]),
                d=int(obj["d"]),
                a=Partition.from_json(obj["a"]),
                w=Partition.from_json(obj["w"]),
                m=int(obj["m"]),
            )
        except KeyError as exc:
            raise ValueError(f"missing field {exc.args[0]!r} in problem") from None

    def __str__(self):
        return f"N={self.N} d={self.d} a={self.a} w={self.w} m={self.m}"


@dataclass(frozen=True)
class SchubertFrame:
    problem: SchubertProblem
    degrees: tuple[int, ...]  # d_1 < ... < d_N < d_{N+1} = d
    orders_at_zero: tuple[int, ...]  # rho_1 > ... > rho_N > rho_{N+1} = 0
    z_polys: tuple[Polynomial, ...]  # Z_1 .. Z_{N+1}
    t_degrees: tuple[int, ...]  # k_1 .. k_N
    index_set: tuple[int, ...] = field(default=())  # exponents absent from P

    @property
    def N(self) -> int:
        return self.problem.N

    def interlacing_holds(self) -> bool:
        N, dg, rho = self.N, self.degrees, self.orders_at_zero
        if dg[0] < 0:
            return False
        # d_i < rho_{N+1-i} <= d_{i+1}
        return all(dg[i] < rho[N - 1 - i] <= dg[i + 1] for i in range(N))

    def blocks(self):
        """Exponent ranges ``[rho_{N+2-i}, d_i]`` of the basis polynomials Q_i."""
        N = self.N
        return [(self.orders_at_zero[N + 1 - i], self.degrees[i - 1]) for i in range(1, N + 2)]


@dataclass(frozen=True)
class PlaneBasis:
    """A basis of an (N+1)-plane in Poly_d without base points."""

    basis: tuple[Polynomial, ...]
    N: int
    d: int

    def __post_init__(self):
        basis = tuple(self.basis)
        object.__setattr__(self, "basis", basis)
        if len(basis) != self.N + 1:
            raise DegenerateBasis(f"expected {self.N + 1} polynomials, got {len(basis)}")
        if any(not f for f in basis):
            raise DegenerateBasis("zero polynomial in basis")
        if max(f.degree for f in basis) != self.d:
            raise DegenerateBasis(
                f"maximal degree {max(f.degree for f in basis)} != d = {self.d} (base point at infinity)"
            )
        if len(rref(self.coefficient_rows())[1]) != self.N + 1:
            raise DegenerateBasis("basis polynomials are linearly dependent")
        g = basis[0]
        for f in basis[1:]:
            g = poly_gcd(g, f)
        if g.degree > 0:
            raise DegenerateBasis(f"common factor {g} (finite base point)")

    @classmethod
    def of(cls, polys, N: int | None = None, d: int | None = None) -> "PlaneBasis":
        polys = tuple(p if isinstance(p, Polynomial) else Polynomial(p) for p in polys)
        if N is None:
            N = len(polys) - 1
        if d is None:
            d = max(p.degree for p in polys)
        return cls(polys, N, d)

    def coefficient_rows(self):
        return [f.coefficient_list(self.d + 1) for f in self.basis]

    def reduced_rows(self):
        """Canonical RREF of the coefficient matrix; equal iff same subspace."""
        return rref(self.coefficient_rows())[0]

    def same_plane(self, other: "PlaneBasis") -> bool:
        return self.d == other.d and self.reduced_rows() == other.reduced_rows()

    def wronskian(self, monic: bool = True) -> Polynomial:
        return wronskian(self.basis, monic=monic)


def order_spectrum(V: PlaneBasis, xi) -> list[int]:
    """Sorted list of the N+1 distinct orders of polynomials of V at ``xi``."""
    d = V.d
    if is_infinity(xi):
        rows = V.coefficient_rows()
        _, piv = rref(rows, columns=range(d, -1, -1))
        return sorted(d - c for c in piv)
    if is_exact(xi):
        rows = [f.taylor_shift(xi).coefficient_list(d + 1) for f in V.basis]
        _, piv = rref(rows)
        return sorted(piv)
    return _numeric_order_spectrum(V, xi)


def _numeric_order_spectrum(V: PlaneBasis, xi):
    tol = get_config().cluster_tol
    with working_precision():
        xi = mpmath.mpc(xi)
        rows = []
        for f in V.basis:
            g = f.map_coeffs(to_mp).taylor_shift(xi)
            rows.append([to_mp(c) for c in g.coefficient_list(V.d + 1)])
        scale = max(abs(v) for r in rows for v in r)
        thresh = tol * scale
        _, piv = rref(rows, is_zero=lambda v: abs(v) <= thresh)
    return sorted(piv)


def partition_from_orders(orders, N: int) -> Partition:
    orders = sorted(orders)
    if len(orders) != N + 1:
        raise DegenerateBasis(f"order spectrum {orders} does not have {N + 1} entries")
    if orders[0] != 0:
        raise DegenerateBasis(f"base point: smallest order is {orders[0]}")
    # orders o_1 < ... < o_{N+1}; w_i = o_{N+2-i} - (N+1-i)
    return Partition(tuple(orders[N + 1 - i] - (N + 1 - i) for i in range(1, N + 1)))


def cell_partition(V: PlaneBasis, xi) -> Partition:
    """The unique ``w`` with V in the Schubert cell ``Omega°_w(xi)``."""
    return partition_from_orders(order_spectrum(V, xi), V.N)


def expected_wronskian(p: SchubertProblem) -> Polynomial:
    return X ** p.a.size * (X + 1) ** p.m


def frame_data(p: SchubertProblem) -> SchubertFrame:
    """Degrees, orders, Z-polynomials and T-degrees; no feasibility check."""
    N, d, a, w = p.N, p.d, p.a, p.w
    sp = p.special
    degrees = tuple(d - w.entry(l) + l - N - 1 for l in range(1, N + 1)) + (d,)
    orders = tuple(a.entry(l) + N + 1 - l for l in range(1, N + 1)) + (0,)
    z_polys = []
    for i in range(1, N + 2):
        e0 = sum(a.entry(l) for l in range(N + 2 - i, N + 1))
        e1 = sum(sp.entry(l) for l in range(N + 2 - i, N + 1))
        z_polys.append(X ** e0 * (X + 1) ** e1)
    wr_degrees = []
    for i in range(1, N + 2):
        val = i * (d - N) - sum(w.entry(l) for l in range(1, i + 1))
        val -= sum(pt.entry(l) for pt in (a, sp) for l in range(N + 2 - i, N + 1))
        wr_degrees.append(val)
    # T_{N+1-i} = W_i / Z_i
    t_degrees = tuple(wr_degrees[N - j] for j in range(1, N + 1))
    index_set = []
    for i in range(N):
        index_set.extend(range(degrees[i] + 1, orders[N - 1 - i]))
    return SchubertFrame(p, degrees, orders, tuple(z_polys), t_degrees, tuple(index_set))


def schubert_frame(p: SchubertProblem) -> SchubertFrame:
    """Frame of a feasible problem; raises :class:`EmptyIntersection` otherwise."""
    fr = frame_data(p)
    if not fr.interlacing_holds():
        raise EmptyIntersection(
            f"interlacing fails for {p}: degrees {fr.degrees}, orders {fr.orders_at_zero}"
        )
    return fr


def pieri_count(p: SchubertProblem) -> int:
    return 1 if frame_data(p).interlacing_holds() else 0


def special_problems(N: int, d: int):
    """Every valid problem with rank ``N`` and degree ``d`` (feasible or not)."""
    box = d - N
    dim = (N + 1) * box
    for a in partitions_in_box(N, box):
        for w in partitions_in_box(N, box):
            m = dim - a.size - w.size
            if 0 <= m <= box:
                yield SchubertProblem(N, d, a, w, m)


def degree_echelon(polys) -> list[Polynomial]:
    """Recombine ``polys`` to have distinct degrees, returned ascending.

    Inputs that already have distinct degrees come back unchanged.
    """
    rows = [p for p in polys if p]
    out = []
    while rows:
        top = max(rows, key=lambda f: f.degree)
        rows.remove(top)
        rest = []
        for f in rows:
            while f and f.degree in {top.degree} | {g.degree for g in out}:
                piv = top if f.degree == top.degree else next(g for g in out if g.degree == f.degree)
                f = f - piv * (f.lc / piv.lc)
            if f:
                rest.append(f)
        out.append(top)
        rows = rest
    if len({f.degree for f in out}) != len(out):
        raise AssertionError("degree echelon failed")
    return sorted(out, key=lambda f: f.degree)


@dataclass(frozen=True)
class WronskianFlag:
    flag_basis: tuple[Polynomial, ...]  # V_l = span of the first l members
    raw: tuple[Polynomial, ...]
    monic: tuple[Polynomial, ...]


def intermediate_wronskians(V: PlaneBasis) -> WronskianFlag:
    """Wronskians ``W_l`` of the steps ``V_l = V ∩ Poly_{d_l}`` of the degree flag."""
    flag = degree_echelon(V.basis)
    if len(flag) != V.N + 1:
        raise DegenerateBasis("basis is linearly dependent")
    raw = tuple(wronskian(flag[:l]) for l in range(1, V.N + 2))
    if any(not w for w in raw):
        raise DegenerateBasis("vanishing intermediate Wronskian")
    return WronskianFlag(tuple(flag), raw, tuple(w.monic() for w in raw))


def singular_points(V: PlaneBasis) -> dict:
    """Map each root of the Wronskian (and infinity) to its cell partition.

    Roots in Q(i) are exact keys; other roots appear as mpmath numbers and
    their partitions come from a tolerance-based numeric rank computation.
    """
    W = V.wronskian(monic=True)
    out = {}
    rs = gaussian_roots(W)
    for r, _ in rs.exact:
        out[r] = cell_partition(V, r)
    for r, _ in rs.numeric():
        out[r] = cell_partition(V, r)
    out[INFINITY] = cell_partition(V, INFINITY)
    return out
