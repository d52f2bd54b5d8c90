"""Partitions, sl_{N+1} weights and the k-vector bookkeeping.

A partition ``w = (w_1 >= ... >= w_N >= 0)`` doubles as the highest weight
``w_1 lambda_1 + ... + w_N lambda_N`` of sl_{N+1}.  Weights are stored in
lambda-coordinates normalized so that the coefficient of ``lambda_{N+1}``
is zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "Partition",
    "Weight",
    "codimension",
    "dual_partition",
    "alpha_pairing",
    "partition_of_k",
    "special_partition",
    "partitions_in_box",
    "NotAdmissible",
]


class NotAdmissible(ValueError):
    """A k-vector does not produce a dominant weight."""


@dataclass(frozen=True, order=True)
class Partition:
    entries: tuple[int, ...]

    def __post_init__(self):
        ent = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", ent)
        if not ent:
            raise ValueError("a partition needs rank N >= 1")
        if any(e < 0 for e in ent):
            raise ValueError(f"negative entry in partition {ent}")
        if any(ent[i] < ent[i + 1] for i in range(len(ent) - 1)):
            raise ValueError(f"partition entries must be weakly decreasing: {ent}")

    @classmethod
    def of(cls, *entries) -> "Partition":
        if len(entries) == 1 and not isinstance(entries[0], int):
            entries = tuple(entries[0])
        return cls(tuple(entries))

    @property
    def N(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def entry(self, i: int) -> int:
        """1-based entry with ``w_{N+1} = 0``."""
        if i == self.N + 1:
            return 0
        if not 1 <= i <= self.N:
            raise IndexError(i)
        return self.entries[i - 1]

    @property
    def size(self) -> int:
        return sum(self.entries)

    def is_special(self) -> bool:
        return all(e == 0 for e in self.entries[1:])

    def dynkin_labels(self) -> tuple[int, ...]:
        return tuple(alpha_pairing(self, i) for i in range(1, self.N + 1))

    def to_weight(self) -> "Weight":
        return Weight(self.entries + (0,))

    def to_json(self) -> dict:
        return {"N": self.N, "entries": list(self.entries)}

    @classmethod
    def from_json(cls, obj) -> "Partition":
        if isinstance(obj, dict):
            p = cls(tuple(obj["entries"]))
            if "N" in obj and obj["N"] != p.N:
                raise ValueError(f"partition rank mismatch: N={obj['N']} vs {p.entries}")
            return p
        return cls(tuple(obj))

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


@dataclass(frozen=True)
class Weight:
    """Element of h* in lambda-coordinates, last coefficient normalized to 0."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(v) for v in self.coeffs)
        shift = c[-1]
        object.__setattr__(self, "coeffs", tuple(v - shift for v in c))

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def simple_root(cls, i: int, N: int) -> "Weight":
        c = [0] * (N + 1)
        c[i - 1] += 1
        c[i] -= 1
        return cls(tuple(c))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coeffs))

    def dynkin_labels(self) -> tuple[int, ...]:
        c = self.coeffs
        return tuple(c[i] - c[i + 1] for i in range(self.N))

    def is_dominant(self) -> bool:
        return all(v >= 0 for v in self.dynkin_labels())

    def to_partition(self) -> Partition:
        if not self.is_dominant():
            raise NotAdmissible(f"weight {self.coeffs} is not dominant")
        return Partition(self.coeffs[:-1])


def codimension(w: Partition) -> int:
    return w.size


def dual_partition(w: Partition) -> Partition:
    """``(w_1, w_1 - w_N, w_1 - w_{N-1}, ..., w_1 - w_2)``."""
    e = w.entries
    return Partition((e[0],) + tuple(e[0] - e[j] for j in range(len(e) - 1, 0, -1)))


def alpha_pairing(w: Partition, i: int) -> int:
    """``(alpha_i, Lambda_w) = w_i - w_{i+1}`` with ``w_{N+1} = 0``."""
    if not 1 <= i <= w.N:
        raise IndexError(f"root index {i} out of range 1..{w.N}")
    return w.entry(i) - w.entry(i + 1)


def partition_of_k(ws: Sequence[Partition], k: Sequence[int]) -> Partition:
    """Partition of ``sum Lambda(j) - sum k_i alpha_i``.

    Entry ``i`` is ``sum_j w_i(j) - k_i + k_{i-1} - k_N`` (``k_0 = 0``).
    """
    if not ws:
        raise ValueError("need at least one partition")
    N = ws[0].N
    if any(w.N != N for w in ws):
        raise ValueError("partitions of different rank")
    if len(k) != N or any(v < 0 for v in k):
        raise ValueError(f"k must be {N} non-negative integers, got {tuple(k)}")
    kk = (0,) + tuple(k)
    entries = []
    for i in range(1, N + 1):
        entries.append(sum(w.entry(i) for w in ws) - kk[i] + kk[i - 1] - kk[N])
    if any(entries[i] < entries[i + 1] for i in range(N - 1)) or entries[-1] < 0:
        raise NotAdmissible(f"k not admissible for these weights: {tuple(entries)}")
    return Partition(tuple(entries))


def special_partition(m: int, N: int) -> Partition:
    return Partition((m,) + (0,) * (N - 1))


def partitions_in_box(N: int, width: int):
    """All partitions with ``N`` parts bounded by ``width``, in lexicographic order."""

    def rec(prefix, cap, left):
        if left == 0:
            yield Partition(tuple(prefix))
            return
        for v in range(cap, -1, -1):
            yield from rec(prefix + [v], v, left - 1)

    return list(rec([], width, N))
