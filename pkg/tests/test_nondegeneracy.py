from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import example_problem, printed_plane
from schubert_gaudin.exact_algebra import Polynomial, X, to_mp
from schubert_gaudin.exact_algebra.scalars import GaussianRational
from schubert_gaudin.nondegeneracy import (
    BetheCoordinates,
    bethe_coordinates,
    bethe_residuals,
    generating_function_value,
    is_nondegenerate,
    master_function_value,
    max_abs,
    relative_discriminant,
    relative_resultant,
    split_tz,
    t_polynomials,
)
from schubert_gaudin.partitions import Partition, alpha_pairing
from schubert_gaudin.schubert import PlaneBasis, SchubertProblem, pieri_count, schubert_frame, special_problems
from schubert_gaudin.special import construct_special_basis

x = sympy.symbols("x")

NONDEGENERATE = []
for _N in (1, 2, 3):
    for _d in range(_N + 1, 7):
        for _p in special_problems(_N, _d):
            if pieri_count(_p):
                _V = construct_special_basis(_p).plane
                if is_nondegenerate(_V, _p).nondegenerate:
                    NONDEGENERATE.append((_p, _V))


def to_sympy(f: Polynomial):
    return sum(sympy.Rational(c.numerator, c.denominator) * x**k for k, c in enumerate(f.coeffs))


def phi_sign(k):
    return (-1) ** sum(k[p] * k[p + 1] for p in range(len(k) - 1))


# T/Z splitting -----------------------------------------------------------------


def test_split_tz_example():
    f = 3 * X**2 * (X + 1) * (X**2 + X + 5)
    s = split_tz(f)
    assert s.T == X**2 + X + 5
    assert s.Z == X**2 * (X + 1)
    assert s.lc == 3


def test_split_tz_constant_and_zero():
    assert split_tz(Polynomial([7])).T == Polynomial([1])
    with pytest.raises(ValueError):
        split_tz(Polynomial())


def test_relative_discriminant_example_one():
    # W_2 = x (x^2 + 4/5 x + 1/5): Disc(T) = -4/25, Res(x, T)^2 = 1/25
    W2 = X * (X**2 + Fraction(4, 5) * X + Fraction(1, 5))
    assert relative_discriminant(W2) == Fraction(-4, 625)
    assert sympy.discriminant(to_sympy(split_tz(W2).T), x) == sympy.Rational(-4, 25)


def test_relative_resultant_ignores_marked_points():
    f1 = X**3 * (X + 2)
    f2 = (X + 1) ** 2 * (X - 3)
    # Res(x+2, x-3) * Res(x+2, (x+1)^2) * Res(x-3, x^3)
    assert relative_resultant(f1, f2) == Fraction(-5) * Fraction(1) * Fraction(27)


# non-degeneracy ----------------------------------------------------------------


@pytest.mark.parametrize(
    "n, expected",
    [
        (1, (X**2 + Fraction(4, 5) * X + Fraction(1, 5), X + Fraction(1, 5))),
        (2, (X**3 + Fraction(3, 2) * X**2 + X + Fraction(1, 4), Polynomial([1]))),
        (3, (X**2 + Fraction(9, 8) * X + Fraction(3, 8), X + Fraction(1, 4), Polynomial([1]))),
        (4, (X + Fraction(3, 5), X + Fraction(3, 10))),
    ],
)
def test_t_polynomials_examples(n, expected):
    rep = is_nondegenerate(printed_plane(n), example_problem(n))
    assert rep.T == expected
    assert rep.nondegenerate


def test_degeneracy_criteria():
    # the checks only read T, so planes with the right frame but outside
    # the intersection exercise each failure mode
    p = SchubertProblem(1, 3, Partition((2,)), Partition((0,)), 2)
    rep = is_nondegenerate(PlaneBasis([(X - 1) ** 2, X**3], 1, 3), p)
    assert rep.T == ((X - 1) ** 2,)
    assert rep.squarefree == [False] and rep.nonvanishing == [True]
    assert not rep.nondegenerate
    rep = is_nondegenerate(PlaneBasis([X**2 + X, X**3 + 2], 1, 3), p)
    assert rep.nonvanishing == [False]
    assert not rep.nondegenerate


def test_neighbour_common_root():
    h = X + Fraction(1, 2)
    with pytest.raises(ZeroDivisionError, match="share a root"):
        generating_function_value((h, h), example_problem(4))


def test_frame_mismatch():
    V = PlaneBasis([Polynomial([1]), X**3], 1, 3)
    p = SchubertProblem(1, 3, Partition((2,)), Partition((0,)), 2)
    with pytest.raises(ValueError, match="frame mismatch"):
        t_polynomials(V, schubert_frame(p))


# master and generating functions ------------------------------------------------


def test_master_function_examples():
    for n in (1, 2, 4):
        p, V = example_problem(n), printed_plane(n)
        bc = bethe_coordinates(V, p)
        assert bc.is_exact()
        Ts = is_nondegenerate(V, p).T
        assert generating_function_value(Ts, p) == phi_sign(bc.k) * master_function_value(bc)
    bc = bethe_coordinates(printed_plane(1), example_problem(1))
    assert master_function_value(bc) == Fraction(3125, 4)


def test_master_function_n_equals_one_closed_form():
    # N = 1: Psi = Disc(T) * prod_j ((-1)^k T(z_j))^(-c_j)
    for p, V in NONDEGENERATE:
        if p.N != 1:
            continue
        bc = bethe_coordinates(V, p)
        T = t_polynomials(V, schubert_frame(p))[0]
        k = T.degree
        c = [alpha_pairing(p.a, 1), alpha_pairing(p.special, 1)]
        disc = sympy.discriminant(to_sympy(T), x) if k > 1 else 1
        expected = sympy.Rational(disc)
        for z, cj in zip((0, -1), c):
            expected *= ((-1) ** k * to_sympy(T).subs(x, z)) ** (-cj)
        got = master_function_value(bc)
        if bc.is_exact():
            assert sympy.Rational(got.numerator, got.denominator) == expected
        else:
            with mpmath.workprec(256):
                ref = mpmath.mpf(sympy.fraction(expected)[0]) / mpmath.mpf(sympy.fraction(expected)[1])
                assert abs(got - ref) <= mpmath.mpf(10) ** -40 * max(1, abs(ref))


@pytest.mark.parametrize("idx", range(0, len(NONDEGENERATE), 7))
def test_phi_equals_signed_psi(idx):
    p, V = NONDEGENERATE[idx]
    bc = bethe_coordinates(V, p)
    Ts = t_polynomials(V, schubert_frame(p))
    phi = generating_function_value(Ts, p)
    psi = master_function_value(bc)
    with mpmath.workprec(256):
        diff = abs(to_mp(phi) - phi_sign(bc.k) * mpmath.mpc(to_mp(psi)))
        assert diff <= mpmath.mpf(10) ** -40 * max(1, abs(to_mp(phi)))


def test_generating_function_degree_check():
    p = example_problem(1)
    with pytest.raises(ValueError, match="degree mismatch"):
        generating_function_value((X + 1, X + 2), p)


# Bethe equations ---------------------------------------------------------------


def test_bethe_residuals_vanish_exactly_example_one():
    bc = bethe_coordinates(printed_plane(1), example_problem(1))
    res = bethe_residuals(bc)
    assert [len(r) for r in res] == [2, 1]
    assert max_abs(res) == 0 and isinstance(max_abs(res), Fraction)
    assert bc.t[1] == (Fraction(-1, 5),)


def test_bethe_residuals_example_two_numeric():
    bc = bethe_coordinates(printed_plane(2), example_problem(2))
    half = Fraction(-1, 2)
    assert set(bc.t[0]) == {half, GaussianRational(half, half), GaussianRational(half, -half)}
    assert max_abs(bethe_residuals(bc.numeric())) < 1e-60


def test_perturbed_coordinates_fail():
    bc = bethe_coordinates(printed_plane(1), example_problem(1))
    bad = bc.replace(1, 0, Fraction(-1, 4))
    assert max_abs(bethe_residuals(bad)) > 0.01


def test_coincident_coordinates_raise():
    bc = bethe_coordinates(printed_plane(1), example_problem(1))
    with pytest.raises(ZeroDivisionError):
        bethe_residuals(bc.replace(1, 0, Fraction(0)))
    with pytest.raises(ZeroDivisionError):
        master_function_value(bc.replace(1, 0, bc.t[0][0]))


def test_coordinates_validation():
    with pytest.raises(ValueError, match="one coordinate block"):
        BetheCoordinates(((1,),), (Partition((1, 0)), Partition((1, 0))))


@given(st.sampled_from(NONDEGENERATE))
def test_roots_of_nondegenerate_planes_solve_bethe(pV):
    p, V = pV
    bc = bethe_coordinates(V, p)
    assert max_abs(bethe_residuals(bc)) < 1e-20


@given(st.sampled_from([pv for pv in NONDEGENERATE if max(pv[0].N, 0) >= 1]), st.randoms(use_true_random=False))
def test_block_permutation_symmetry(pV, rnd):
    p, V = pV
    bc = bethe_coordinates(V, p)
    perm = [list(b) for b in bc.t]
    for b in perm:
        rnd.shuffle(b)
    shuffled = BetheCoordinates(perm, bc.weights, bc.marked_points)
    a, b = master_function_value(bc), master_function_value(shuffled)
    with mpmath.workprec(256):
        assert abs(mpmath.mpc(to_mp(a)) - mpmath.mpc(to_mp(b))) <= mpmath.mpf(10) ** -40 * max(1, abs(mpmath.mpc(to_mp(a))))
