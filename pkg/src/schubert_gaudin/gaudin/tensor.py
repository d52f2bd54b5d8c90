"""Two-factor tensor products: diagonal action, Casimir, Gaudin Hamiltonians, singular vectors."""

from __future__ import annotations

from fractions import Fraction

import mpmath

from ..config import get_config, working_precision
from ..exact_algebra import is_exact, rref, to_mp
from ..partitions import Partition
from .irrep import RepresentationModule
from .sparse import SparseMatrix

__all__ = [
    "TensorProduct",
    "casimir",
    "gaudin_hamiltonian",
    "singular_subspace_dimension",
    "highest_weight_check",
    "eigenvalue_of",
]


class TensorProduct:
    """``M1 ⊗ M2`` with basis index ``i * dim2 + j`` for the pair ``(i, j)``."""

    def __init__(self, m1: RepresentationModule, m2: RepresentationModule):
        if m1.N != m2.N:
            raise ValueError("tensor factors must have the same rank")
        self.m1, self.m2 = m1, m2
        self.N = m1.N
        self.dim = m1.dim * m2.dim
        self._id1 = SparseMatrix.identity(m1.dim)
        self._id2 = SparseMatrix.identity(m2.dim)

    def flat(self, v: dict) -> dict:
        return {i * self.m2.dim + j: x for (i, j), x in v.items()}

    def pairs(self, v: dict) -> dict:
        d2 = self.m2.dim
        return {divmod(k, d2): x for k, x in v.items()}

    def diagonal(self, name: str, i: int) -> SparseMatrix:
        """``x ⊗ 1 + 1 ⊗ x`` for the generator ``x = name_i``."""
        return self.m1.generator(name, i).kron(self._id2) + self._id1.kron(self.m2.generator(name, i))

    def apply_diagonal(self, name: str, i: int, v: dict) -> dict:
        return self.pairs(self.diagonal(name, i).apply(self.flat(v)))

    def top_vector(self) -> dict:
        return {(self.m1.highest_vector, self.m2.highest_vector): Fraction(1)}

    def weight_space(self, target: Partition) -> list[tuple[int, int]]:
        want = target.to_weight()
        return [
            (i, j)
            for i, a in enumerate(self.m1.weights)
            for j, b in enumerate(self.m2.weights)
            if a + b == want
        ]


def _inverse_cartan(N: int):
    return [[Fraction(min(i, j)) - Fraction(i * j, N + 1) for j in range(1, N + 1)] for i in range(1, N + 1)]


def casimir(tp: TensorProduct) -> SparseMatrix:
    """``sum_{a<b} (E_ab ⊗ E_ba + E_ba ⊗ E_ab) + sum_ij (A^{-1})_ij h_i ⊗ h_j``."""
    m1, m2, N = tp.m1, tp.m2, tp.N
    out = SparseMatrix(tp.dim)
    for a in range(1, N + 2):
        for b in range(a + 1, N + 2):
            x1, y1 = m1.root_vector(a, b), m1.root_vector(b, a)
            x2, y2 = m2.root_vector(a, b), m2.root_vector(b, a)
            out = out + x1.kron(y2) + y1.kron(x2)
    inv = _inverse_cartan(N)
    for i in range(N):
        for j in range(N):
            out = out + m1.h[i].kron(m2.h[j]).scale(inv[i][j])
    return out


def gaudin_hamiltonian(tp: TensorProduct, z, j: int) -> SparseMatrix:
    """``H_j = C_12 / (z_j - z_other)`` for two marked points, ``j`` in {1, 2}."""
    z1, z2 = z
    if z1 == z2:
        raise ValueError("marked points must be distinct")
    if j not in (1, 2):
        raise ValueError("Hamiltonian index must be 1 or 2")
    diff = (z1 - z2) if j == 1 else (z2 - z1)
    return casimir(tp).scale(Fraction(1) / diff)


def singular_subspace_dimension(tp: TensorProduct, target: Partition) -> int:
    """Dimension of ``{v in L_target-weight space : e_i v = 0 for all i}``."""
    space = tp.weight_space(target)
    if not space:
        return 0
    rows: dict = {}
    for c, (i, j) in enumerate(space):
        for k in range(1, tp.N + 1):
            for out, x in tp.apply_diagonal("e", k, {(i, j): Fraction(1)}).items():
                rows.setdefault((k, out), [Fraction(0)] * len(space))[c] += x
    r = len(rref(list(rows.values()), columns=range(len(space)))[1]) if rows else 0
    return len(space) - r


def _is_small(v: dict, scale) -> bool:
    if all(is_exact(x) for x in v.values()):
        return all(x == 0 for x in v.values())
    tol = get_config().residual_tol
    with working_precision():
        return all(abs(to_mp(x)) <= tol * scale for x in v.values())


def _scale_of(v: dict):
    with working_precision():
        return max((abs(to_mp(x)) for x in v.values()), default=mpmath.mpf(0))


def highest_weight_check(v: dict, tp: TensorProduct) -> tuple[bool, list[int]]:
    """Whether every ``e_i`` kills ``v``; the witness lists the ``i`` that do not."""
    if all(x == 0 for x in v.values()):
        raise ValueError("highest weight check of the zero vector")
    scale = _scale_of(v)
    bad = [i for i in range(1, tp.N + 1) if not _is_small(tp.apply_diagonal("e", i, v), scale)]
    return not bad, bad


def eigenvalue_of(op: SparseMatrix, tp: TensorProduct, v: dict):
    """``(lambda, residual)`` with ``op v = lambda v + residual``."""
    fv = tp.flat(v)
    with working_precision():
        image = op.apply(fv)
        k = max(fv, key=lambda key: abs(to_mp(fv[key])))
        lam = image.get(k, 0) / fv[k]
        residual = {key: image.get(key, 0) - lam * fv.get(key, 0) for key in set(image) | set(fv)}
        residual = {key: x for key, x in residual.items() if x != 0}
    return lam, tp.pairs(residual)
