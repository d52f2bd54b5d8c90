from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import example_problem, printed_plane
from schubert_gaudin.exact_algebra import Polynomial, X
from schubert_gaudin.reconstruction import (
    InconsistentWronskians,
    plane_from_wronskians,
    wronskian_operator,
)
from schubert_gaudin.schubert import (
    DegenerateBasis,
    PlaneBasis,
    intermediate_wronskians,
    pieri_count,
    special_problems,
)
from schubert_gaudin.special import construct_special_basis


@st.composite
def planes(draw, max_N=3, max_d=6):
    N = draw(st.integers(1, max_N))
    d = draw(st.integers(N + 1, max_d))
    rows = [draw(st.lists(st.integers(-3, 3), min_size=d + 1, max_size=d + 1)) for _ in range(N + 1)]
    rows[-1][-1] = draw(st.integers(1, 3))
    try:
        return PlaneBasis([Polynomial(r) for r in rows], N, d)
    except DegenerateBasis:
        assume(False)


def test_examples_round_trip(example):
    V = printed_plane(example)
    flag = intermediate_wronskians(V)
    assert plane_from_wronskians(flag.monic, V.d).same_plane(V)
    assert plane_from_wronskians(flag.raw, V.d).same_plane(V)


def test_example_one_basis():
    W = intermediate_wronskians(printed_plane(1)).monic
    U = plane_from_wronskians(W, 5)
    assert U.basis[0].coeffs[0] == 1
    assert all(wronskian_operator(W)(q).numerator == 0 for q in U.basis)


def test_operator_annihilates_plane_and_nothing_else():
    V = printed_plane(4)
    op = wronskian_operator(intermediate_wronskians(V).monic)
    for q in V.basis:
        assert op(q).numerator == 0
    assert op(X**3).numerator != 0
    assert op(Polynomial([1])).numerator != 0


def test_inconsistent_tuple():
    # x g' - g = x forces g = x log x
    with pytest.raises(InconsistentWronskians, match="kernel has dimension 1"):
        plane_from_wronskians([X, X], 4)
    with pytest.raises(InconsistentWronskians, match="zero Wronskian"):
        plane_from_wronskians([X, Polynomial()], 4)
    with pytest.raises(InconsistentWronskians, match="empty"):
        plane_from_wronskians([], 4)


def test_consistent_simple_tuple():
    U = plane_from_wronskians([Polynomial([1]), X], 2)
    assert U.same_plane(PlaneBasis([Polynomial([1]), X**2], 1, 2))


def test_degree_bound_too_small():
    W = intermediate_wronskians(printed_plane(1)).monic
    with pytest.raises(InconsistentWronskians):
        plane_from_wronskians(W, 4)


@given(st.sampled_from([p for N in (1, 2, 3) for d in range(N + 1, 7) for p in special_problems(N, d) if pieri_count(p)]))
def test_round_trip_special_planes(p):
    V = construct_special_basis(p).plane
    assert plane_from_wronskians(intermediate_wronskians(V).monic, p.d).same_plane(V)


@given(planes(max_N=2, max_d=5))
def test_round_trip_random_planes(V):
    flag = intermediate_wronskians(V)
    U = plane_from_wronskians(flag.monic, V.d)
    assert U.same_plane(V)
    assert intermediate_wronskians(U).monic == flag.monic


@given(planes(max_N=2, max_d=5), st.integers(1, 5), st.integers(-5, 5).filter(bool))
def test_reconstruction_scale_invariant(V, c, s):
    flag = intermediate_wronskians(V)
    scaled = [w * Fraction(s, c) for w in flag.raw]
    assert plane_from_wronskians(scaled, V.d).same_plane(V)
