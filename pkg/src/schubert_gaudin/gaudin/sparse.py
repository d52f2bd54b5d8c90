"""Column-major sparse matrices and dict vectors over exact or mpmath scalars."""

from __future__ import annotations

from fractions import Fraction

__all__ = ["SparseMatrix", "vec_add", "vec_scale", "vec_is_zero"]


def vec_add(u: dict, v: dict, c=1) -> dict:
    """``u + c v`` dropping exact zeros."""
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) + c * x
        if y == 0:
            out.pop(k, None)
        else:
            out[k] = y
    return out


def vec_scale(v: dict, c) -> dict:
    if c == 0:
        return {}
    return {k: c * x for k, x in v.items()}


def vec_is_zero(v: dict) -> bool:
    return all(x == 0 for x in v.values())


class SparseMatrix:
    """Square matrix stored as ``cols[j] = {i: a_ij}``."""

    __slots__ = ("dim", "cols")

    def __init__(self, dim: int, cols: dict | None = None):
        self.dim = dim
        self.cols = {j: c for j, c in (cols or {}).items() if c}

    @classmethod
    def identity(cls, dim: int) -> "SparseMatrix":
        return cls(dim, {j: {j: Fraction(1)} for j in range(dim)})

    @classmethod
    def from_entries(cls, dim: int, entries) -> "SparseMatrix":
        cols: dict = {}
        for i, j, a in entries:
            if a:
                col = cols.setdefault(j, {})
                col[i] = col.get(i, 0) + a
        return cls(dim, cols)

    def entries(self):
        for j, col in self.cols.items():
            for i, a in col.items():
                yield i, j, a

    def __getitem__(self, ij):
        i, j = ij
        return self.cols.get(j, {}).get(i, 0)

    def apply(self, v: dict) -> dict:
        out: dict = {}
        for j, x in v.items():
            if x == 0:
                continue
            for i, a in self.cols.get(j, {}).items():
                out[i] = out.get(i, 0) + a * x
        return {i: y for i, y in out.items() if y != 0}

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        return SparseMatrix(self.dim, {j: self.apply(c) for j, c in other.cols.items()})

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        cols = {j: dict(c) for j, c in self.cols.items()}
        for j, c in other.cols.items():
            cols[j] = vec_add(cols.get(j, {}), c)
        return SparseMatrix(self.dim, cols)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "SparseMatrix":
        return SparseMatrix(self.dim, {j: vec_scale(col, c) for j, col in self.cols.items()})

    def commutator(self, other: "SparseMatrix") -> "SparseMatrix":
        return self @ other - other @ self

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        n2 = other.dim
        cols: dict = {}
        for j1, c1 in self.cols.items():
            for j2, c2 in other.cols.items():
                cols[j1 * n2 + j2] = {i1 * n2 + i2: a * b for i1, a in c1.items() for i2, b in c2.items()}
        return SparseMatrix(self.dim * n2, cols)

    def is_zero(self) -> bool:
        return all(vec_is_zero(c) for c in self.cols.values())

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.dim == other.dim and (self - other).is_zero()

    __hash__ = None

    def to_dense(self):
        rows = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for i, j, a in self.entries():
            rows[i][j] = a
        return rows

    def __repr__(self):
        return f"SparseMatrix(dim={self.dim}, nnz={sum(len(c) for c in self.cols.values())})"
