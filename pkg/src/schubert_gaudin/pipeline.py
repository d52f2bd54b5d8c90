"""End-to-end analysis of a special Schubert intersection.

frame -> basis -> intermediate Wronskians -> non-degeneracy -> Bethe
coordinates and residuals -> (optionally) the Bethe vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath

from .config import working_precision
from .exact_algebra import INFINITY, to_mp
from .gaudin import (
    TensorProduct,
    build_irrep,
    eigenvalue_of,
    evaluate_bethe_vector,
    gaudin_hamiltonian,
    highest_weight_check,
    universal_weight_function,
)
from .nondegeneracy import (
    BetheCoordinates,
    NondegeneracyReport,
    bethe_coordinates,
    bethe_residuals,
    is_nondegenerate,
    max_abs,
)
from .partitions import Partition, dual_partition, partition_of_k
from .schubert import (
    MARKED_POINTS,
    EmptyIntersection,
    SchubertProblem,
    cell_partition,
    intermediate_wronskians,
    schubert_frame,
)
from .serialization import (
    encode_partition,
    encode_polynomial,
    encode_scalar,
    encode_tensor_vector,
)
from .special import SpecialBasisResult, construct_special_basis

__all__ = ["IntersectionReport", "BetheVectorReport", "analyze", "bethe_vector_report"]


@dataclass
class BetheVectorReport:
    vector: dict
    tensor: TensorProduct
    highest_weight: bool
    violations: list
    eigenvalue: object
    eigen_residual: object

    def to_json(self) -> dict:
        return {
            "components": encode_tensor_vector(self.vector, self.tensor.m1, self.tensor.m2),
            "nonzero": bool(self.vector),
            "highest_weight": self.highest_weight,
            "violating_generators": self.violations,
            "h2_eigenvalue": encode_scalar(self.eigenvalue),
            "h2_residual_max_abs": _encode_magnitude(self.eigen_residual),
        }


@dataclass
class IntersectionReport:
    problem: SchubertProblem
    empty: bool
    special: SpecialBasisResult | None = None
    wronskians: tuple = ()
    wronskians_raw: tuple = ()
    cells: dict = field(default_factory=dict)
    nondegeneracy: NondegeneracyReport | None = None
    bethe: BetheCoordinates | None = None
    residuals: list | None = None
    weight: Partition | None = None
    vector: BetheVectorReport | None = None

    @property
    def residual_max_abs(self):
        return max_abs(self.residuals) if self.residuals is not None else None

    def to_json(self) -> dict:
        out = {"problem": self.problem.to_json(), "empty": self.empty}
        if self.empty:
            return out
        fr = self.special.frame
        nd = self.nondegeneracy
        out.update(
            {
                "frame": {
                    "degrees": list(fr.degrees),
                    "orders_at_zero": list(fr.orders_at_zero),
                    "t_degrees": list(fr.t_degrees),
                    "index_set": list(fr.index_set),
                },
                "constants": [encode_scalar(c) for c in self.special.constants],
                "master_poly": encode_polynomial(self.special.master_poly),
                "plane": [encode_polynomial(q) for q in self.special.plane.basis],
                "wronskians": [encode_polynomial(w) for w in self.wronskians],
                "wronskians_raw": [encode_polynomial(w) for w in self.wronskians_raw],
                "cell_partitions": {k: encode_partition(v) for k, v in self.cells.items()},
                "nondegenerate": nd.nondegenerate,
                "checks": {
                    "nonvanishing_at_marked_points": nd.nonvanishing,
                    "squarefree": nd.squarefree,
                    "neighbours_coprime": nd.coprime,
                },
                "T": [encode_polynomial(t) for t in nd.T],
                "bethe_weight": encode_partition(self.weight),
                "dual_partition": encode_partition(dual_partition(self.problem.w)),
            }
        )
        if self.bethe is not None:
            out["t_values"] = [[encode_scalar(x) for x in block] for block in self.bethe.t]
            out["t_exact"] = self.bethe.is_exact()
            out["residual_max_abs"] = _encode_magnitude(self.residual_max_abs)
        if self.vector is not None:
            out["bethe_vector"] = self.vector.to_json()
        return out


def _encode_magnitude(x):
    if x is None:
        return None
    if x == 0:
        return "0"
    with working_precision():
        return mpmath.nstr(to_mp(x), 6)


def _point_key(xi) -> str:
    if xi == INFINITY:
        return "inf"
    return str(xi)


def bethe_vector_report(p: SchubertProblem, bc: BetheCoordinates) -> BetheVectorReport:
    tp = TensorProduct(build_irrep(p.N, p.a), build_irrep(p.N, p.special))
    v = evaluate_bethe_vector(universal_weight_function(bc), tp)
    if not v:
        return BetheVectorReport(v, tp, False, [], 0, None)
    ok, bad = highest_weight_check(v, tp)
    lam, res = eigenvalue_of(gaudin_hamiltonian(tp, MARKED_POINTS, 2), tp, v)
    res_abs = max_abs([list(res.values())]) if res else 0
    return BetheVectorReport(v, tp, ok, bad, lam, res_abs)


def analyze(p: SchubertProblem, with_vector: bool = False) -> IntersectionReport:
    try:
        schubert_frame(p)
    except EmptyIntersection:
        return IntersectionReport(p, True)
    special = construct_special_basis(p)
    V = special.plane
    flag = intermediate_wronskians(V)
    cells = {_point_key(xi): cell_partition(V, xi) for xi in MARKED_POINTS + (INFINITY,)}
    nd = is_nondegenerate(V, p)
    rep = IntersectionReport(
        p,
        False,
        special,
        flag.monic,
        flag.raw,
        cells,
        nd,
        weight=partition_of_k((p.a, p.special), special.frame.t_degrees),
    )
    if nd.nondegenerate:
        rep.bethe = bethe_coordinates(V, p)
        rep.residuals = bethe_residuals(rep.bethe)
        if with_vector:
            rep.vector = bethe_vector_report(p, rep.bethe)
    return rep
