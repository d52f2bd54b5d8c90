"""Exact scalars, polynomials, rational functions and linear algebra."""

from .linalg import (
    bareiss_det,
    leibniz_det,
    nullspace,
    rank,
    row_space_equal,
    rref,
    solve_fraction_free,
)
from .polynomial import (
    INFINITY,
    Polynomial,
    X,
    discriminant,
    is_infinity,
    order_at,
    poly_gcd,
    resultant,
    squarefree_decomposition,
    sylvester_matrix,
    wronskian,
)
from .ratfunc import RationalFunction
from .roots import RootSet, gaussian_roots, numeric_roots
from .scalars import (
    GaussianRational,
    I,
    as_exact,
    format_scalar,
    gaussian,
    is_exact,
    parse_scalar,
    to_mp,
)

__all__ = [
    "INFINITY",
    "I",
    "GaussianRational",
    "Polynomial",
    "RationalFunction",
    "RootSet",
    "X",
    "as_exact",
    "bareiss_det",
    "discriminant",
    "format_scalar",
    "gaussian",
    "gaussian_roots",
    "is_exact",
    "is_infinity",
    "leibniz_det",
    "nullspace",
    "numeric_roots",
    "order_at",
    "parse_scalar",
    "poly_gcd",
    "rank",
    "resultant",
    "row_space_equal",
    "rref",
    "solve_fraction_free",
    "squarefree_decomposition",
    "sylvester_matrix",
    "to_mp",
    "wronskian",
]
