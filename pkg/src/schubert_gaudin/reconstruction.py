"""Recover a plane from its intermediate Wronskians.

The plane is the space of polynomial solutions of degree <= d of

    D (W_N^2 / (W_{N-1} W_{N+1})) D ... D (W_1^2 / (W_2 W_0)) D (u / W_1) = 0,

with ``W_0 = 1``.  The operator is applied to every monomial and the kernel
of the resulting linear map is computed exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .exact_algebra import Polynomial, RationalFunction, nullspace, rref
from .exact_algebra.intpoly import (
    int_deriv,
    int_divexact,
    int_gcd,
    int_mul,
    int_pseudo_divmod,
    int_sub,
    primitive_ints,
)
from .schubert import PlaneBasis

__all__ = ["InconsistentWronskians", "wronskian_operator", "plane_from_wronskians"]


class InconsistentWronskians(ValueError):
    """The operator's polynomial kernel does not have dimension N+1."""


def _factors(W):
    Ws = [Polynomial((1,))] + [w if isinstance(w, Polynomial) else Polynomial(w) for w in W]
    if any(not w for w in Ws):
        raise InconsistentWronskians("inconsistent Wronskian tuple: zero Wronskian")
    N = len(W) - 1
    return Ws, [RationalFunction(Ws[l] * Ws[l], Ws[l + 1] * Ws[l - 1]) for l in range(1, N + 1)]


def wronskian_operator(W):
    """The composed operator as a function on polynomials (or rational functions)."""
    Ws, mults = _factors(W)
    inv_w1 = RationalFunction(Polynomial((1,)), Ws[1])

    def op(u):
        r = (inv_w1 * u).derivative()
        for m in mults:
            r = (m * r).derivative()
        return r

    return op


def _kernel_numerators(W, d: int) -> list[list[int]]:
    """Numerators of the operator applied to ``1, x, ..., x^d``, up to one common constant.

    Each stage keeps ``u_j = n_j / q``.  With ``r = rad(q)`` and
    ``lc(q)^k q' r = H q`` the derivative is proportional to
    ``(lc(q)^k n' r - n H) / (q r)``, so only the shared denominator needs
    gcds.  Every rescaling below acts on all numerators alike and leaves the
    kernel unchanged.
    """
    Ws = [[1]] + [primitive_ints(w.coeffs if isinstance(w, Polynomial) else w) for w in W]
    if any(not w for w in Ws):
        raise InconsistentWronskians("inconsistent Wronskian tuple: zero Wronskian")
    N = len(W) - 1
    nums = [[0] * j + [1] for j in range(d + 1)]

    def derive(nums, q):
        dq = int_deriv(q)
        if not dq:
            return [int_deriv(n) for n in nums], q
        r = int_divexact(q, int_gcd(q, dq))
        H, rem, k = int_pseudo_divmod(int_mul(dq, r), q)
        if rem:
            raise AssertionError("q' rad(q) is not divisible by q")
        s = q[-1] ** k
        sr = [s * c for c in r]
        return [int_sub(int_mul(int_deriv(n), sr), int_mul(n, H)) for n in nums], int_mul(q, r)

    nums, q = derive(nums, Ws[1])
    for l in range(1, N + 1):
        a, b = int_mul(Ws[l], Ws[l]), int_mul(Ws[l + 1], Ws[l - 1])
        g = int_gcd(a, q)
        if len(g) > 1:
            a, q = int_divexact(a, g), int_divexact(q, g)
        g = int_gcd(b, a)
        if len(g) > 1:
            a, b = int_divexact(a, g), int_divexact(b, g)
        nums, q = derive([int_mul(n, a) for n in nums], int_mul(q, b))
    return nums


def plane_from_wronskians(W, d: int) -> PlaneBasis:
    """Row-reduced basis of the plane with intermediate Wronskians ``W_1..W_{N+1}``."""
    W = list(W)
    if not W:
        raise InconsistentWronskians("inconsistent Wronskian tuple: empty")
    N = len(W) - 1
    nums = _kernel_numerators(W, d)
    nums = [Polynomial(n) for n in nums]
    height = max((p.degree for p in nums), default=-1) + 1
    if height:
        columns = [p.coefficient_list(height) for p in nums]
        matrix = [[columns[j][i] for j in range(d + 1)] for i in range(height)]
        kernel = nullspace(matrix, d + 1)
    else:
        kernel = [[Fraction(int(i == j)) for i in range(d + 1)] for j in range(d + 1)]
    if len(kernel) != N + 1:
        raise InconsistentWronskians(
            f"inconsistent Wronskian tuple: kernel has dimension {len(kernel)}, expected {N + 1}"
        )
    rows, _ = rref(kernel)
    basis = [Polynomial(r) for r in rows]
    try:
        return PlaneBasis(basis, N, max(p.degree for p in basis))
    except ValueError as exc:
        raise InconsistentWronskians(f"inconsistent Wronskian tuple: {exc}") from None
