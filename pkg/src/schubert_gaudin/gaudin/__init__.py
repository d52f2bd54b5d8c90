"""sl_{N+1} modules, the two-point Gaudin model and Bethe vectors."""

from .irrep import DEFAULT_DIM_CAP, RepresentationModule, build_irrep, weyl_dimension
from .sparse import SparseMatrix
from .tensor import (
    TensorProduct,
    casimir,
    eigenvalue_of,
    gaudin_hamiltonian,
    highest_weight_check,
    singular_subspace_dimension,
)
from .weight_function import (
    WeightFunctionExpansion,
    evaluate_bethe_vector,
    expected_weight,
    g_function,
    universal_weight_function,
    word_tuples,
)

__all__ = [
    "DEFAULT_DIM_CAP",
    "RepresentationModule",
    "SparseMatrix",
    "TensorProduct",
    "WeightFunctionExpansion",
    "build_irrep",
    "casimir",
    "eigenvalue_of",
    "evaluate_bethe_vector",
    "expected_weight",
    "g_function",
    "gaudin_hamiltonian",
    "highest_weight_check",
    "singular_subspace_dimension",
    "universal_weight_function",
    "weyl_dimension",
    "word_tuples",
]
