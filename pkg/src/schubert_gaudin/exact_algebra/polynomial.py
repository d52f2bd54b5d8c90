"""Dense univariate polynomials over Q, Q(i) or mpmath numbers.

Coefficients are stored ascending by exponent with trailing zeros trimmed;
the zero polynomial has no coefficients.  Integer inputs are promoted to
``Fraction`` so that ``/`` never falls back to floats.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import zip_longest

from .intpoly import int_gcd, primitive_ints
from .scalars import GaussianRational

__all__ = [
    "Polynomial",
    "X",
    "INFINITY",
    "is_infinity",
    "poly_gcd",
    "order_at",
    "wronskian",
    "wronskian_matrix",
    "sylvester_matrix",
    "resultant",
    "discriminant",
    "squarefree_decomposition",
]

INFINITY = math.inf


def is_infinity(xi) -> bool:
    return isinstance(xi, float) and math.isinf(xi)


def _coerce(c):
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return Fraction(c)
    return c


class Polynomial:
    """Immutable polynomial ``c[0] + c[1] x + ... + c[n] x^n``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs):
        # caller guarantees trimmed, coerced coefficients
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1):
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots):
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    # basic queries ------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int):
        if k < 0:
            raise IndexError("negative exponent")
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def coefficient_list(self, length: int):
        """Coefficients padded with zeros to ``length`` entries."""
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in {length} slots")
        return list(self.coeffs) + [Fraction(0)] * (length - len(self.coeffs))

    def is_exact(self) -> bool:
        return all(isinstance(c, (Fraction, GaussianRational)) for c in self.coeffs)

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _lift(other):
        if isinstance(other, Polynomial):
            return other
        return Polynomial((other,))

    def __add__(self, other):
        other = self._lift(other)
        return Polynomial(
            [a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)]
        )

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        return Polynomial(
            [a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)]
        )

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            other = _coerce(other)
            if not other:
                return Polynomial()
            return Polynomial._raw(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a non-negative integer")
        result, base = Polynomial((1,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = 1 / other.lc
        if len(rem) <= dq:
            return Polynomial(), self
        quot = [0] * (len(rem) - dq)
        oc = other.coeffs
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv
            if not c:
                continue
            quot[k - dq] = c
            for j in range(dq + 1):
                rem[k - dq + j] -= c * oc[j]
        return Polynomial(quot), Polynomial(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        """Scalar division, or exact division by a polynomial.

        Raises ``ArithmeticError`` when a polynomial divisor leaves a remainder.
        """
        if not isinstance(other, Polynomial):
            inv = 1 / _coerce(other)
            return Polynomial._raw(tuple(c * inv for c in self.coeffs))
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return self.coeffs == Polynomial._lift(other).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # calculus and evaluation -----------------------------------------------
    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, k: int = 1) -> "Polynomial":
        cs = self.coeffs
        for _ in range(k):
            cs = tuple(i * cs[i] for i in range(1, len(cs)))
        return Polynomial(cs)

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            raise ValueError("zero polynomial cannot be made monic")
        return self / self.lc

    def taylor_shift(self, c) -> "Polynomial":
        """Return ``f(x + c)``; coefficients are the Taylor coefficients at ``c``."""
        cs = list(self.coeffs)
        n = len(cs)
        if not c:
            return self
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                cs[j] = cs[j] + c * cs[j + 1]
        return Polynomial(cs)

    def map_coeffs(self, fn) -> "Polynomial":
        return Polynomial([fn(c) for c in self.coeffs])

    def __repr__(self):
        return f"Polynomial({list(map(str, self.coeffs))})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"({c})*{mono}")
            else:
                terms.append(f"({c})")
        return " + ".join(terms)


X = Polynomial((0, 1))


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd over the coefficient field; gcd(0, 0) = 0."""
    if f and g and all(type(c) is Fraction for c in f.coeffs + g.coeffs):
        # primitive PRS over Z avoids rational coefficient growth
        return Polynomial(int_gcd(primitive_ints(f.coeffs), primitive_ints(g.coeffs))).monic()
    while g:
        f, g = g, f % g
    return f.monic() if f else f


def order_at(f: Polynomial, xi, d: int | None = None) -> int:
    """Order of ``f`` at ``xi``; at infinity this is ``d - deg f``."""
    if not f:
        raise ValueError("undefined order: zero polynomial")
    if is_infinity(xi):
        if d is None:
            raise ValueError("order at infinity needs the ambient degree d")
        if f.degree > d:
            raise ValueError(f"degree {f.degree} exceeds ambient degree {d}")
        return d - f.degree
    shifted = f.taylor_shift(xi)
    for k, c in enumerate(shifted.coeffs):
        if c:
            return k
    raise AssertionError("unreachable")


def wronskian_matrix(fs):
    k = len(fs)
    rows = []
    for f in fs:
        row, g = [], f
        for _ in range(k):
            row.append(g)
            g = g.derivative()
        rows.append(row)
    return rows


def wronskian(fs, monic: bool = False) -> Polynomial:
    """Determinant of ``(d^j f_i / dx^j)``, optionally normalized to be monic."""
    from .linalg import bareiss_det

    fs = list(fs)
    if not fs:
        raise ValueError("empty family")
    w = bareiss_det(wronskian_matrix(fs), zero=Polynomial(), one=Polynomial((1,)))
    if monic and w:
        return w.monic()
    return w


def sylvester_matrix(f: Polynomial, g: Polynomial):
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    zero = Fraction(0)
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def resultant(f: Polynomial, g: Polynomial):
    """Sylvester-determinant resultant; for monic inputs ``prod(a_i - b_j)``."""
    from .linalg import bareiss_det

    if not f or not g:
        raise ValueError("resultant of the zero polynomial")
    if f.degree == 0:
        return f.lc ** g.degree
    if g.degree == 0:
        return g.lc ** f.degree
    if all(type(c) is Fraction for c in f.coeffs + g.coeffs):
        # clear denominators so Bareiss runs on machine integers
        cf = math.lcm(*(c.denominator for c in f.coeffs))
        cg = math.lcm(*(c.denominator for c in g.coeffs))
        F = Polynomial([int(c * cf) for c in f.coeffs])
        G = Polynomial([int(c * cg) for c in g.coeffs])
        rows = [[int(c) for c in row] for row in sylvester_matrix(F, G)]
        return Fraction(bareiss_det(rows, 0, 1), cf**g.degree * cg**f.degree)
    return bareiss_det(sylvester_matrix(f, g))


def discriminant(f: Polynomial):
    """``(-1)^{n(n-1)/2} Res(f, f') / lc(f)``."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant of a constant polynomial")
    if n == 1:
        return Fraction(1)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc


def squarefree_decomposition(f: Polynomial):
    """Yun's algorithm: list of ``(g_i, i)`` with ``f = lc * prod g_i^i``, g_i monic."""
    if not f:
        raise ValueError("zero polynomial")
    out = []
    if f.degree == 0:
        return out
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f / a
    c = fp / a
    dpoly = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, dpoly)
        b = b / a
        c = dpoly / a
        if a.degree > 0:
            out.append((a.monic(), i))
        i += 1
        dpoly = c - b.derivative()
    return out
