"""Helpers on integer coefficient lists (ascending), used where only the
polynomial up to a nonzero constant matters."""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "primitive_ints",
    "int_mul",
    "int_deriv",
    "int_sub",
    "int_prem",
    "int_gcd",
    "int_divexact",
    "int_pseudo_divmod",
]


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _primitive(a: list[int]) -> list[int]:
    a = _trim(a)
    if not a:
        return a
    g = math.gcd(*a)
    if a[-1] < 0:
        g = -g
    return [x // g for x in a]


def primitive_ints(coeffs) -> list[int]:
    """Primitive integer list proportional to rational ``coeffs``."""
    cs = [Fraction(c) for c in coeffs]
    scale = math.lcm(*(c.denominator for c in cs)) if cs else 1
    return _primitive([int(c * scale) for c in cs])


def int_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def int_deriv(a: list[int]) -> list[int]:
    return [k * a[k] for k in range(1, len(a))]


def int_sub(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)])


def int_pseudo_divmod(a: list[int], b: list[int]):
    """``(q, r, k)`` with ``lc(b)^k a = q b + r``."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [0] * max(len(a) - db, 0)
    k = 0
    while r and len(r) - 1 >= db:
        c, shift = r[-1], len(r) - 1 - db
        r = [x * lb for x in r]
        q = [x * lb for x in q]
        q[shift] += c
        k += 1
        for i, y in enumerate(b):
            r[shift + i] -= c * y
        _trim(r)
    return q, r, k


def int_prem(a: list[int], b: list[int]) -> list[int]:
    return _primitive(int_pseudo_divmod(a, b)[1])


def int_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd with positive leading coefficient."""
    a, b = _primitive(list(a)), _primitive(list(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, int_prem(a, b)
    return a


def int_divexact(a: list[int], b: list[int]) -> list[int]:
    """Primitive quotient ``a / b``; raises if ``b`` does not divide ``a``."""
    q, r, _ = int_pseudo_divmod(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return _primitive(q)
