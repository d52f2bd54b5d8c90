"""Irreducible sl_{N+1}-modules realized inside tensor products of exterior powers.

``L_w`` is the cyclic span of the top vector of
``(Λ^1)^{⊗c_1} ⊗ ... ⊗ (Λ^N)^{⊗c_N}`` with ``c_r = w_r - w_{r+1}``.
Exterior powers are built on sorted index subsets; for adjacent indices
``E_{a,a+1}`` and ``E_{a+1,a}`` act without signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from ..partitions import Partition, Weight
from .sparse import SparseMatrix, vec_add

__all__ = ["RepresentationModule", "build_irrep", "weyl_dimension", "DEFAULT_DIM_CAP"]

DEFAULT_DIM_CAP = 5000


def weyl_dimension(w: Partition) -> int:
    N = w.N
    ent = [w.entry(i) for i in range(1, N + 2)]
    num = prod(ent[i] - ent[j] + j - i for i in range(N + 1) for j in range(i + 1, N + 1))
    den = prod(j - i for i in range(N + 1) for j in range(i + 1, N + 1))
    return num // den


@dataclass
class RepresentationModule:
    N: int
    highest: Partition
    basis_labels: list
    weights: list  # Weight of each basis vector
    e: list  # e[i-1] for i = 1..N
    f: list
    h: list
    highest_vector: int = 0

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    def weight_of(self, idx: int) -> Weight:
        return self.weights[idx]

    def generator(self, name: str, i: int) -> SparseMatrix:
        return {"e": self.e, "f": self.f, "h": self.h}[name][i - 1]

    def root_vector(self, a: int, b: int) -> SparseMatrix:
        """Matrix of ``E_ab`` (``a != b``, 1-based) built from commutators."""
        if a == b or not (1 <= a <= self.N + 1 and 1 <= b <= self.N + 1):
            raise ValueError(f"no root vector E_{a}{b}")
        if b == a + 1:
            return self.e[a - 1]
        if a == b + 1:
            return self.f[b - 1]
        if a < b:
            return self.root_vector(a, b - 1).commutator(self.e[b - 2])
        return self.f[a - 2].commutator(self.root_vector(a - 1, b))

    def commutation_defects(self) -> list[str]:
        """Names of the Chevalley relations that fail; empty when all hold."""
        bad = []
        N = self.N
        for i in range(N):
            for j in range(N):
                c = self.e[i].commutator(self.f[j])
                if c != (self.h[i] if i == j else SparseMatrix(self.dim)):
                    bad.append(f"[e{i + 1},f{j + 1}]")
                if not self.h[i].commutator(self.h[j]).is_zero():
                    bad.append(f"[h{i + 1},h{j + 1}]")
                # [h_i, e_j] = a_ij e_j with the Cartan matrix of A_N
                a = 2 if i == j else (-1 if abs(i - j) == 1 else 0)
                if self.h[i].commutator(self.e[j]) != self.e[j].scale(a):
                    bad.append(f"[h{i + 1},e{j + 1}]")
                if self.h[i].commutator(self.f[j]) != self.f[j].scale(-a):
                    bad.append(f"[h{i + 1},f{j + 1}]")
        return sorted(set(bad))


def _ambient_factors(w: Partition):
    return [r for r in range(1, w.N + 1) for _ in range(w.entry(r) - w.entry(r + 1))]


def _lower(state, i):
    """``f_i`` on a pure tensor of subsets: list of resulting states (coefficient 1)."""
    out = []
    for pos, S in enumerate(state):
        if i in S and i + 1 not in S:
            T = tuple(sorted((set(S) - {i}) | {i + 1}))
            out.append(state[:pos] + (T,) + state[pos + 1:])
    return out


def _raise(state, i):
    out = []
    for pos, S in enumerate(state):
        if i + 1 in S and i not in S:
            T = tuple(sorted((set(S) - {i + 1}) | {i}))
            out.append(state[:pos] + (T,) + state[pos + 1:])
    return out


def _apply(op, v: dict, i: int) -> dict:
    out: dict = {}
    for s, x in v.items():
        for t in op(s, i):
            out[t] = out.get(t, 0) + x
    return {k: y for k, y in out.items() if y != 0}


def _content(state, N):
    c = [0] * (N + 1)
    for S in state:
        for a in S:
            c[a - 1] += 1
    return tuple(c)


def _echelon(vectors):
    """Fully reduced echelon basis of sparse vectors: list of (pivot, vector)."""
    basis: list = []
    for v in vectors:
        for p, b in basis:
            if v.get(p):
                v = vec_add(v, b, -v[p])
        if not v:
            continue
        p = min(v)
        v = {k: x / v[p] for k, x in v.items()}
        basis = [(q, vec_add(b, v, -b[p]) if b.get(p) else b) for q, b in basis]
        basis.append((p, v))
    basis.sort(key=lambda pb: pb[0])
    return basis


def build_irrep(N: int, w: Partition, cap: int = DEFAULT_DIM_CAP) -> RepresentationModule:
    if not isinstance(w, Partition):
        w = Partition(tuple(w))
    if w.N != N:
        raise ValueError(f"partition {w} does not have N={N} entries")
    dim = weyl_dimension(w)
    if dim > cap:
        raise ValueError(f"module dimension {dim} exceeds cap {cap}")
    top = tuple(tuple(range(1, r + 1)) for r in _ambient_factors(w))
    # layer by layer: (content -> echelon basis); f_i lowers depth by one
    layers = [{_content(top, N): [(top, {top: Fraction(1)})]}]
    while True:
        cand: dict = {}
        for space in layers[-1].values():
            for _, v in space:
                for i in range(1, N + 1):
                    u = _apply(_lower, v, i)
                    if u:
                        cand.setdefault(_content(next(iter(u)), N), []).append(u)
        if not cand:
            break
        layers.append({c: _echelon(vs) for c, vs in sorted(cand.items())})

    index, labels, weights, vecs = {}, [], [], []
    for layer in layers:
        for c, space in layer.items():
            for n, (p, v) in enumerate(space):
                index[(c, p)] = len(labels)
                labels.append((Weight(c).coeffs[:-1], n))
                weights.append(Weight(c))
                vecs.append((c, v))
    if len(labels) != dim:
        raise AssertionError(f"built {len(labels)} vectors, Weyl dimension is {dim}")

    pivots_by_content: dict = {}
    for layer in layers:
        for c, space in layer.items():
            pivots_by_content[c] = [p for p, _ in space]

    def matrix(op, i):
        cols = {}
        for j, (c, v) in enumerate(vecs):
            u = _apply(op, v, i)
            if not u:
                continue
            c2 = _content(next(iter(u)), N)
            cols[j] = {index[(c2, p)]: u[p] for p in pivots_by_content.get(c2, []) if u.get(p)}
        return SparseMatrix(dim, cols)

    e = [matrix(_raise, i) for i in range(1, N + 1)]
    f = [matrix(_lower, i) for i in range(1, N + 1)]
    h = []
    for i in range(1, N + 1):
        diag = {j: wt.coeffs[i - 1] - wt.coeffs[i] for j, wt in enumerate(weights)}
        h.append(SparseMatrix(dim, {j: {j: Fraction(a)} for j, a in diag.items() if a}))
    return RepresentationModule(N, w, labels, weights, e, f, h)
