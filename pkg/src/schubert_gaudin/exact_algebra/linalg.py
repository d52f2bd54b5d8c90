"""Exact linear algebra on lists of lists.

Entries may be Fractions, Gaussian rationals or polynomials; every routine
only needs ``+ - *`` and exact ``/``.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "bareiss_det",
    "leibniz_det",
    "rref",
    "rank",
    "nullspace",
    "solve_fraction_free",
    "row_space_equal",
]


def bareiss_det(matrix, zero=Fraction(0), one=Fraction(1)):
    """Fraction-free determinant (Bareiss) with row pivoting."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return one
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return zero
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                num = row_i[j] * pk - mik * row_k[j]
                # Bareiss quotients are exact; keep integers integral
                row_i[j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
        prev = pk
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def leibniz_det(matrix):
    """Permutation-expansion determinant; an independent oracle for small sizes."""
    from itertools import permutations

    n = len(matrix)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inv % 2 else 1)
        for i, p in enumerate(perm):
            term = term * matrix[i][p]
            if not term:
                break
        total = total + term
    return total


def rref(rows, columns=None, is_zero=None):
    """Reduced row echelon form over a field.

    ``columns`` fixes the column order used to pick pivots (default left to
    right).  Returns ``(reduced_rows, pivot_columns)``; zero rows dropped.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    order = list(range(ncols)) if columns is None else list(columns)
    zero_test = (lambda v: not v) if is_zero is None else is_zero
    pivots = []
    r = 0
    for c in order:
        if r == len(m):
            break
        piv = None
        if is_zero is None:
            for i in range(r, len(m)):
                if m[i][c]:
                    piv = i
                    break
        else:
            # numeric: largest magnitude pivot
            best = None
            for i in range(r, len(m)):
                if not zero_test(m[i][c]):
                    mag = abs(m[i][c])
                    if best is None or mag > best:
                        best, piv = mag, i
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r and not zero_test(m[i][c]):
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], pr)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int | None = None):
    """Basis of ``{v : M v = 0}`` as a list of vectors (exact)."""
    if not rows:
        if ncols is None:
            raise ValueError("need ncols for an empty matrix")
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ncols = len(rows[0])
    red, piv = rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve_fraction_free(a, b):
    """Solve the square system ``a x = b`` exactly.

    Forward elimination is fraction-free (Bareiss), so integer matrices stay
    integral until the back substitution.  Raises ``ValueError`` when singular.
    """
    n = len(a)
    m = [[Fraction(v) if isinstance(v, int) else v for v in list(row) + [rhs]]
         for row, rhs in zip(a, b)]
    prev = Fraction(1)
    for k in range(n):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    break
            else:
                raise ValueError("singular system")
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n + 1):
                m[i][j] = (m[i][j] * pk - mik * m[k][j]) / prev
            m[i][k] = 0
        prev = pk
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = m[i][n] - sum(m[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / m[i][i]
    return x


def row_space_equal(rows_a, rows_b) -> bool:
    ra, _ = rref(rows_a)
    rb, _ = rref(rows_b)
    return ra == rb
