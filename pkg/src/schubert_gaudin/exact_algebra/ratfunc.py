"""Reduced rational functions ``numerator / denominator`` in one variable."""

from __future__ import annotations

from .polynomial import Polynomial, poly_gcd

__all__ = ["RationalFunction"]


class RationalFunction:
    """A reduced fraction of polynomials with a monic denominator."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Polynomial, denominator: Polynomial | None = None):
        if denominator is None:
            denominator = Polynomial((1,))
        if not denominator:
            raise ZeroDivisionError("zero denominator")
        if not numerator:
            self.numerator = Polynomial()
            self.denominator = Polynomial((1,))
            return
        g = poly_gcd(numerator, denominator)
        if g.degree > 0:
            numerator = numerator / g
            denominator = denominator / g
        lc = denominator.lc
        if lc != 1:
            numerator = numerator / lc
            denominator = denominator / lc
        self.numerator = numerator
        self.denominator = denominator

    @staticmethod
    def _lift(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        return RationalFunction(Polynomial((other,)))

    def is_zero(self) -> bool:
        return not self.numerator

    def __bool__(self):
        return bool(self.numerator)

    def __add__(self, other):
        o = self._lift(other)
        if self.denominator == o.denominator:
            return RationalFunction(self.numerator + o.numerator, self.denominator)
        return RationalFunction(
            self.numerator * o.denominator + o.numerator * self.denominator,
            self.denominator * o.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        o = self._lift(other)
        # cross-cancel before multiplying to keep degrees small
        g1 = poly_gcd(self.numerator, o.denominator) if self.numerator else None
        g2 = poly_gcd(o.numerator, self.denominator) if o.numerator else None
        n1, d2 = self.numerator, o.denominator
        n2, d1 = o.numerator, self.denominator
        if g1 is not None and g1.degree > 0:
            n1, d2 = n1 / g1, d2 / g1
        if g2 is not None and g2.degree > 0:
            n2, d1 = n2 / g2, d1 / g2
        return RationalFunction(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        return self * RationalFunction(o.denominator, o.numerator)

    def derivative(self) -> "RationalFunction":
        n, d = self.numerator, self.denominator
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, x):
        return self.numerator(x) / self.denominator(x)

    def __eq__(self, other):
        o = self._lift(other)
        return self.numerator == o.numerator and self.denominator == o.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __repr__(self):
        return f"RationalFunction({self.numerator!s} / {self.denominator!s})"
