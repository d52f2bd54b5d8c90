"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals.

Every exact computation in the package runs over Q or Q(i).  Plain rationals
are kept as :class:`~fractions.Fraction`; a value with a nonzero imaginary
part is a :class:`GaussianRational`.  Arithmetic on a ``GaussianRational``
collapses back to ``Fraction`` whenever the imaginary part cancels, so code
written against ``+ - * /`` works unchanged over either field.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import mpmath

__all__ = [
    "GaussianRational",
    "I",
    "gaussian",
    "as_exact",
    "is_exact",
    "conjugate",
    "real_part",
    "imag_part",
    "to_mp",
    "format_scalar",
    "parse_scalar",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with ``im != 0``.

    Use :func:`gaussian` to build values; it returns a plain ``Fraction``
    when the imaginary part is zero.
    """

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        self.re = _frac(re)
        self.im = _frac(im)

    # arithmetic -----------------------------------------------------------
    @staticmethod
    def _split(other):
        if isinstance(other, GaussianRational):
            return other.re, other.im
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        return gaussian(self.re + o[0], self.im + o[1])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        return gaussian(self.re - o[0], self.im - o[1])

    def __rsub__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        return gaussian(o[0] - self.re, o[1] - self.im)

    def __mul__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = o
        return gaussian(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        c, d = o
        n = c * c + d * d
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b = self.re, self.im
        return gaussian((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        return GaussianRational(*o) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return 1 / (self ** (-n))
        result, base = Fraction(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        return self.re == o[0] and self.im == o[1]

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return True  # im != 0 by construction

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        sign = "+" if self.im > 0 else "-"
        return f"({self.re} {sign} {abs(self.im)}*I)"


def gaussian(re, im=0):
    """Return ``re + im*i`` as a Fraction when ``im == 0``."""
    re, im = _frac(re), _frac(im)
    if im == 0:
        return re
    return GaussianRational(re, im)


I = GaussianRational(0, 1)


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, GaussianRational))


def as_exact(x):
    """Coerce ints to Fraction; pass exact scalars through; reject others."""
    if isinstance(x, Fraction) or isinstance(x, GaussianRational):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def real_part(x):
    if isinstance(x, GaussianRational):
        return x.re
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return mpmath.re(x)


def imag_part(x):
    if isinstance(x, GaussianRational):
        return x.im
    if isinstance(x, (int, Fraction)):
        return Fraction(0)
    return mpmath.im(x)


def conjugate(x):
    if isinstance(x, GaussianRational):
        return x.conjugate()
    if isinstance(x, (int, Fraction)):
        return x
    return mpmath.conj(x)


def to_mp(x):
    """Convert any supported scalar to an mpmath number at current precision."""
    if isinstance(x, GaussianRational):
        return mpmath.mpc(mpmath.mpf(x.re.numerator) / x.re.denominator,
                          mpmath.mpf(x.im.numerator) / x.im.denominator)
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    if isinstance(x, int):
        return mpmath.mpf(x)
    return mpmath.mpmathify(x)


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x, digits: int = 40):
    """Canonical JSON form: ``"p/q"`` or ``{"re": "p/q", "im": "r/s"}``.

    Inexact (mpmath) values are written as decimal strings tagged ``approx``.
    """
    if isinstance(x, (int, Fraction)):
        return _frac_str(Fraction(x))
    if isinstance(x, GaussianRational):
        return {"re": _frac_str(x.re), "im": _frac_str(x.im)}
    z = mpmath.mpc(x)
    return {
        "re": mpmath.nstr(z.real, digits),
        "im": mpmath.nstr(z.imag, digits),
        "approx": True,
    }


def parse_scalar(obj):
    """Inverse of :func:`format_scalar` for exact encodings.

    Accepts ``"p/q"``, ``"p"``, ints, and ``{"re": ..., "im": ...}``.
    """
    if isinstance(obj, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        return Fraction(obj.strip())
    if isinstance(obj, dict):
        if obj.get("approx"):
            return mpmath.mpc(mpmath.mpf(obj["re"]), mpmath.mpf(obj["im"]))
        return gaussian(Fraction(str(obj["re"])), Fraction(str(obj.get("im", "0"))))
    raise TypeError(f"cannot parse scalar from {obj!r}")
