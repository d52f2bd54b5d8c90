"""Special Schubert intersections in Grassmannians of polynomials and the
Bethe vectors they produce for the two-point sl_{N+1} Gaudin model."""

from .nondegeneracy import bethe_coordinates, bethe_residuals, is_nondegenerate
from .partitions import Partition, dual_partition, partition_of_k
from .pipeline import IntersectionReport, analyze
from .reconstruction import plane_from_wronskians
from .schubert import (
    EmptyIntersection,
    PlaneBasis,
    SchubertProblem,
    cell_partition,
    intermediate_wronskians,
    schubert_frame,
)
from .special import closed_form_determinant, construct_special_basis, truncated_basis

__all__ = [
    "EmptyIntersection",
    "IntersectionReport",
    "Partition",
    "PlaneBasis",
    "SchubertProblem",
    "analyze",
    "bethe_coordinates",
    "bethe_residuals",
    "cell_partition",
    "closed_form_determinant",
    "construct_special_basis",
    "dual_partition",
    "intermediate_wronskians",
    "is_nondegenerate",
    "partition_of_k",
    "plane_from_wronskians",
    "schubert_frame",
    "truncated_basis",
]
