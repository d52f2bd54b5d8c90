"""Root extraction: exact over Q(i) where possible, numeric otherwise.

Exact roots are found by a guess-and-certify loop.  If ``g`` has
coefficients in Z[i] with leading coefficient ``L`` and ``r`` is a root
lying in Q(i), then ``L*r`` is a Gaussian integer.  Rounding a 256-bit
numeric approximation of ``L*r`` therefore gives the only candidate, which
is then checked by exact evaluation.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

from ..config import get_config
from .polynomial import Polynomial, squarefree_decomposition
from .scalars import GaussianRational, gaussian, to_mp

__all__ = ["numeric_roots", "gaussian_roots", "RootSet"]


def numeric_roots(f: Polynomial, prec: int | None = None, polish: bool = True):
    """All complex roots (with multiplicity) via companion-matrix eigenvalues.

    Each eigenvalue is refined by Newton steps on ``f`` at working precision.
    """
    prec = prec or get_config().precision_bits
    n = f.degree
    if n < 1:
        return []
    with mpmath.workprec(prec):
        cs = [to_mp(c) for c in f.coeffs]
        lead = cs[-1]
        mon = [c / lead for c in cs]
        if n == 1:
            return [mpmath.mpc(-mon[0])]
        comp = mpmath.zeros(n, n)
        for i in range(1, n):
            comp[i, i - 1] = 1
        for i in range(n):
            comp[i, n - 1] = -mon[i]
        eigs = mpmath.eig(comp, left=False, right=False)
        roots = [mpmath.mpc(e) for e in eigs]
        if polish:
            df = [i * cs[i] for i in range(1, len(cs))]
            roots = [_newton(cs, df, r, get_config().newton_steps) for r in roots]
        return sorted(roots, key=lambda z: (float(z.real), float(z.imag)))


def _horner(cs, x):
    acc = mpmath.mpc(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _newton(cs, df, x, steps):
    for _ in range(steps):
        d = _horner(df, x)
        if d == 0:
            break
        step = _horner(cs, x) / d
        x = x - step
        if abs(step) == 0:
            break
    return x


def _gaussian_integer_scale(g: Polynomial):
    """Multiplier turning all coefficients into Gaussian integers."""
    den = 1
    for c in g.coeffs:
        if isinstance(c, GaussianRational):
            den = math.lcm(den, c.re.denominator, c.im.denominator)
        else:
            den = math.lcm(den, Fraction(c).denominator)
    return den


def _round_mp(x) -> int:
    return int(mpmath.nint(x))


class RootSet:
    """Exact roots found in Q(i) plus the factor whose roots are not in Q(i).

    ``exact`` is a list of ``(root, multiplicity)``; ``remainder`` is monic.
    """

    def __init__(self, exact, remainder: Polynomial):
        self.exact = exact
        self.remainder = remainder

    @property
    def complete(self) -> bool:
        return self.remainder.degree <= 0

    def numeric(self, prec: int | None = None):
        """Roots of the remainder, numerically, with multiplicity."""
        out = []
        if self.remainder.degree <= 0:
            return out
        for g, mult in squarefree_decomposition(self.remainder):
            for r in numeric_roots(g, prec):
                out.append((r, mult))
        return out

    def all_roots(self, prec: int | None = None):
        """Flat list with multiplicity: exact roots first, then numeric ones."""
        flat = []
        for r, k in self.exact:
            flat.extend([r] * k)
        for r, k in self.numeric(prec):
            flat.extend([r] * k)
        return flat


def gaussian_roots(f: Polynomial) -> RootSet:
    """Certified roots of an exact polynomial that lie in Q(i)."""
    if not f:
        raise ValueError("roots of the zero polynomial")
    if not f.is_exact():
        raise TypeError("gaussian_roots needs exact coefficients")
    exact = []
    remainder = Polynomial((1,))
    for g, mult in squarefree_decomposition(f):
        left = g
        prec = get_config().precision_bits
        while True:
            found = False
            if left.degree < 1:
                break
            scale = _gaussian_integer_scale(left)
            lead = left.lc * scale
            lead_mp = to_mp(lead)
            for r in numeric_roots(left, prec):
                y = lead_mp * r
                cand = gaussian(_round_mp(mpmath.re(y)), _round_mp(mpmath.im(y))) / lead
                if not left(cand):
                    exact.append((cand, mult))
                    left = left / Polynomial((-cand, 1))
                    found = True
                    break
            if not found:
                break
        if left.degree > 0:
            remainder = remainder * left ** mult
    exact.sort(key=lambda rk: _sort_key(rk[0]))
    return RootSet(exact, remainder)


def _sort_key(z):
    if isinstance(z, GaussianRational):
        return (z.re, z.im)
    return (Fraction(z), Fraction(0))
