from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import example_problem, printed_plane
from schubert_gaudin.exact_algebra import INFINITY, Polynomial, X, order_at
from schubert_gaudin.partitions import Partition
from schubert_gaudin.schubert import (
    DegenerateBasis,
    EmptyIntersection,
    PlaneBasis,
    SchubertProblem,
    cell_partition,
    expected_wronskian,
    frame_data,
    intermediate_wronskians,
    pieri_count,
    schubert_frame,
    singular_points,
    special_problems,
)

x = sympy.symbols("x")


@st.composite
def planes(draw, max_N=3, max_d=6):
    N = draw(st.integers(1, max_N))
    d = draw(st.integers(N + 1, max_d))
    coeffs = st.integers(-4, 4)
    rows = [draw(st.lists(coeffs, min_size=d + 1, max_size=d + 1)) for _ in range(N + 1)]
    rows[-1][-1] = draw(st.integers(1, 4))
    try:
        return PlaneBasis([Polynomial(r) for r in rows], N, d)
    except DegenerateBasis:
        assume(False)


def cell_oracle(V: PlaneBasis, xi) -> Partition:
    """Cell partition from the flag-intersection dimensions, using sympy ranks.

    With F_k(xi) the polynomials of order >= d - k at xi, the cell of w
    needs dim(V ∩ F_{d-N-1+i-w_i}) = i; scan w_i for the exact jump.
    """
    N, d = V.N, V.d
    if xi is INFINITY:
        rows = [[f[d - j] for j in range(d + 1)] for f in V.basis]
    else:
        shift = sympy.Rational(xi.numerator, xi.denominator)
        rows = []
        for f in V.basis:
            g = sympy.Poly(sum(sympy.Rational(c.numerator, c.denominator) * (x + shift) ** k for k, c in enumerate(f.coeffs)), x)
            cs = g.all_coeffs()[::-1]
            rows.append(cs + [0] * (d + 1 - len(cs)))
    M = sympy.Matrix(rows)

    def dim_with_order(r):
        # polynomials in V whose first r Taylor coefficients vanish
        if r == 0:
            return N + 1
        return N + 1 - M[:, :r].rank()

    w = []
    for i in range(1, N + 1):
        # largest w_i with dim(V ∩ {order >= N+1-i+w_i}) >= i
        wi = max(v for v in range(d - N + 1) if dim_with_order(N + 1 - i + v) >= i)
        w.append(wi)
    return Partition(tuple(w))


# problems and frames ---------------------------------------------------------


def test_problem_validation():
    with pytest.raises(ValueError, match="codimensions"):
        SchubertProblem(2, 5, Partition((3, 0)), Partition((0, 0)), 3)
    with pytest.raises(ValueError, match="must not exceed"):
        SchubertProblem(2, 5, Partition((4, 0)), Partition((0, 0)), 2)
    with pytest.raises(ValueError, match="missing field"):
        SchubertProblem.from_json({"N": 2, "d": 5})
    p = example_problem(4)
    assert SchubertProblem.from_json(p.to_json()) == p


@pytest.mark.parametrize(
    "n, expected",
    [(1, X**3 * (X + 1) ** 3), (2, X**3 * (X + 1) ** 3), (4, X**3 * (X + 1) ** 2)],
)
def test_expected_wronskian(n, expected):
    assert expected_wronskian(example_problem(n)) == expected


def test_expected_wronskian_zero_a():
    p = SchubertProblem(1, 3, Partition((0,)), Partition((2,)), 2)
    assert expected_wronskian(p) == (X + 1) ** 2


def test_frame_example_one():
    fr = schubert_frame(example_problem(1))
    assert fr.degrees == (1, 3, 5)
    assert fr.orders_at_zero == (4, 2, 0)
    assert fr.z_polys == (Polynomial([1]), X, X**3 * (X + 1) ** 3)
    assert fr.t_degrees == (2, 1)
    assert fr.index_set == ()


def test_frame_example_four():
    fr = schubert_frame(example_problem(4))
    assert fr.degrees == (1, 2, 5)
    assert fr.orders_at_zero == (4, 2, 0)
    assert fr.index_set == (3,)
    assert fr.t_degrees == (1, 1)


def test_infeasible_problem_is_empty():
    # d_1 = 2 is not below rho_2 = 2
    p = SchubertProblem(2, 5, Partition((3, 1)), Partition((1, 1)), 3)
    assert not frame_data(p).interlacing_holds()
    with pytest.raises(EmptyIntersection):
        schubert_frame(p)
    assert pieri_count(p) == 0
    assert pieri_count(example_problem(1)) == 1


def test_problem_enumeration_counts():
    ps = [p for N in (1, 2) for d in range(N + 1, 6) for p in special_problems(N, d)]
    assert all(p.a.size + p.w.size + p.m == p.dimension for p in ps)
    # N = 1: every valid problem is feasible (two points on P^1)
    assert all(pieri_count(p) == 1 for p in ps if p.N == 1)


# planes and cells ------------------------------------------------------------


def test_plane_basis_validation():
    with pytest.raises(DegenerateBasis, match="common factor"):
        PlaneBasis([X, X**2, X**3], 2, 3)
    with pytest.raises(DegenerateBasis, match="dependent"):
        PlaneBasis([Polynomial([1]), X, 2 * X, X**3], 3, 3)
    with pytest.raises(DegenerateBasis, match="base point at infinity"):
        PlaneBasis([Polynomial([1]), X], 1, 3)
    with pytest.raises(DegenerateBasis, match="expected 3"):
        PlaneBasis([Polynomial([1]), X], 2, 3)


def test_cell_partitions_example_one():
    V = printed_plane(1)
    assert cell_partition(V, Fraction(0)) == Partition((2, 1))
    assert cell_partition(V, Fraction(7)) == Partition((0, 0))
    assert cell_partition(V, INFINITY) == Partition((2, 1))
    assert cell_partition(V, Fraction(-1)) == Partition((3, 0))


def test_cell_partitions_match_oracle_on_examples(example):
    V = printed_plane(example)
    for xi in (Fraction(0), Fraction(-1), INFINITY, Fraction(2)):
        assert cell_partition(V, xi) == cell_oracle(V, xi)


def test_intermediate_wronskians_example_one():
    flag = intermediate_wronskians(printed_plane(1))
    assert flag.raw[0] == Polynomial([1, 5])
    assert flag.monic[1] == (X * (10 * X**2 + 8 * X + 2)).monic()
    assert flag.monic[2] == X**3 * (X + 1) ** 3


def test_intermediate_wronskians_example_two():
    flag = intermediate_wronskians(printed_plane(2))
    assert flag.raw[0] == Polynomial([1])
    assert flag.raw[1] == 5 * Polynomial([1, 4, 6, 4])


def test_intermediate_wronskians_monomials():
    V = PlaneBasis([Polynomial([1]), X, X**2], 2, 2)
    assert intermediate_wronskians(V).raw == (Polynomial([1]), Polynomial([1]), Polynomial([2]))


def test_intermediate_wronskians_any_basis_order():
    V = printed_plane(1)
    shuffled = PlaneBasis([V.basis[2] + V.basis[0], V.basis[1], V.basis[0]], 2, 5)
    assert intermediate_wronskians(shuffled).monic == intermediate_wronskians(V).monic


def test_singular_points_example_one():
    pts = singular_points(printed_plane(1))
    assert pts == {Fraction(0): Partition((2, 1)), Fraction(-1): Partition((3, 0)), INFINITY: Partition((2, 1))}


def test_singular_points_max_degree_wronskian():
    V = PlaneBasis([Polynomial([1, 1]), Polynomial([2, 0, 1]), Polynomial([0, 1, 0, 1])], 2, 3)
    pts = singular_points(V)
    assert pts[INFINITY] == Partition((0, 0))
    assert sum(w.size for w in pts.values()) == 3


# properties ------------------------------------------------------------------


@given(planes())
def test_singular_codimensions_sum_to_dimension(V):
    pts = singular_points(V)
    assert sum(w.size for w in pts.values()) == (V.N + 1) * (V.d - V.N)


@given(planes(max_N=2, max_d=5), st.sampled_from([Fraction(0), Fraction(-1), Fraction(1, 2)]))
def test_wronskian_order_equals_cell_size(V, xi):
    assert order_at(V.wronskian(), xi) == cell_partition(V, xi).size


@given(planes(max_N=2, max_d=5), st.sampled_from([Fraction(0), Fraction(-1), INFINITY]))
def test_cell_partition_matches_oracle(V, xi):
    assert cell_partition(V, xi) == cell_oracle(V, xi)


@given(planes(), st.integers(-3, 3), st.integers(1, 3))
def test_cell_partition_basis_independent(V, c, s):
    b = list(V.basis)
    b[0] = b[0] * s + b[-1] * c
    W = PlaneBasis(b, V.N, V.d)
    for xi in (Fraction(0), Fraction(-1), INFINITY):
        assert cell_partition(W, xi) == cell_partition(V, xi)
    assert W.same_plane(V)


@given(st.sampled_from([p for N in (1, 2, 3) for d in range(N + 1, 7) for p in special_problems(N, d)]))
def test_frame_invariants(p):
    fr = frame_data(p)
    assert fr.z_polys[0] == Polynomial([1])
    assert fr.z_polys[-1] == expected_wronskian(p)
    assert list(fr.degrees) == sorted(set(fr.degrees))
    assert pieri_count(p) == int(fr.interlacing_holds())
