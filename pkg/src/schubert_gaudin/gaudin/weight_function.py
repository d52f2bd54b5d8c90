"""The universal weight function for two tensor factors.

Word tuples ``(F_1, F_2)`` run over all splittings of the arrangements of
the multiset ``{f_1^k_1, ..., f_N^k_N}``.  A word acts by applying its
rightmost letter first.
"""

from __future__ import annotations

from contextlib import nullcontext
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from ..config import working_precision
from ..exact_algebra import is_exact, to_mp
from ..nondegeneracy import BetheCoordinates
from ..partitions import Weight
from .irrep import RepresentationModule
from .sparse import vec_add
from .tensor import TensorProduct

__all__ = [
    "WordTuple",
    "WeightFunctionExpansion",
    "multiset_words",
    "word_tuples",
    "g_function",
    "universal_weight_function",
    "apply_word",
    "evaluate_bethe_vector",
    "expected_weight",
]

WordTuple = tuple  # (tuple of letters, tuple of letters); letters are 1..N


def multiset_words(k) -> list[tuple[int, ...]]:
    letters = [i for i, ki in enumerate(k, start=1) for _ in range(ki)]
    return sorted(set(permutations(letters)))


def word_tuples(k) -> list[WordTuple]:
    out = []
    for word in multiset_words(k):
        for s in range(len(word) + 1):
            out.append((word[:s], word[s:]))
    return out


def g_function(words: WordTuple, t, z):
    """Product of ``1/(t_a - t_b)`` along each word, closed by ``1/(t_last - z_j)``.

    The p-th occurrence of ``f_i`` in the concatenated word carries ``t_p(i)``.
    """
    seen = [0] * len(t)
    val = Fraction(1)
    for word, zj in zip(words, z):
        chain = []
        for letter in word:
            chain.append(t[letter - 1][seen[letter - 1]])
            seen[letter - 1] += 1
        chain.append(zj)
        for a, b in zip(chain, chain[1:]):
            if a == b:
                raise ZeroDivisionError("coincident coordinates in a weight function denominator")
            val = val / (a - b)
    return val


def _symmetrized(words, t, z):
    total = Fraction(0)
    for perms in product(*(permutations(block) for block in t)):
        total = total + g_function(words, perms, z)
    return total


@dataclass
class WeightFunctionExpansion:
    k: tuple[int, ...]
    terms: dict  # WordTuple -> omega value
    z: tuple


def universal_weight_function(bc: BetheCoordinates, z=None) -> WeightFunctionExpansion:
    t, k = bc.t, bc.k
    z = tuple(bc.marked_points if z is None else z)
    numeric = not (bc.is_exact() and all(is_exact(v) for v in z))
    if numeric:
        bc = bc.numeric()
        t = bc.t
        with working_precision():
            z = tuple(to_mp(v) for v in z)
            terms = {wt: _symmetrized(wt, t, z) for wt in word_tuples(k)}
    else:
        terms = {wt: _symmetrized(wt, t, z) for wt in word_tuples(k)}
    return WeightFunctionExpansion(k, terms, z)


def apply_word(module: RepresentationModule, word, v: dict) -> dict:
    for letter in reversed(word):
        v = module.f[letter - 1].apply(v)
        if not v:
            break
    return v


def evaluate_bethe_vector(expansion: WeightFunctionExpansion, tp: TensorProduct) -> dict:
    """``sum omega * (F_1 v_1 ⊗ F_2 v_2)`` as a dict keyed by basis-index pairs."""
    m1, m2 = tp.m1, tp.m2
    top1 = {m1.highest_vector: Fraction(1)}
    top2 = {m2.highest_vector: Fraction(1)}
    cache1, cache2 = {}, {}
    out: dict = {}
    numeric = not all(is_exact(x) for x in expansion.terms.values())
    ctx = working_precision() if numeric else nullcontext()
    with ctx:
        for (w1, w2), omega in expansion.terms.items():
            if omega == 0:
                continue
            if w1 not in cache1:
                cache1[w1] = apply_word(m1, w1, top1)
            if w2 not in cache2:
                cache2[w2] = apply_word(m2, w2, top2)
            a, b = cache1[w1], cache2[w2]
            if not a or not b:
                continue
            term = {(i, j): omega * x * y for i, x in a.items() for j, y in b.items()}
            out = vec_add(out, term)
    return out


def expected_weight(tp: TensorProduct, k) -> Weight:
    top = tp.m1.highest.to_weight() + tp.m2.highest.to_weight()
    for i, ki in enumerate(k, start=1):
        top = top - Weight.simple_root(i, tp.N).scale(ki)
    return top
