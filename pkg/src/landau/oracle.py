"""Brute-force ground truth at desk scale.

Exhaustively enumerates all valid score sequences for small n and all
labeled tournaments for very small n, so every claim the fast algorithms
make can be certified against an independent search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, List, Optional

import numpy as np

from .sequences import (
    LandauSequence,
    ScoreVector,
    c_value,
    down_trace,
)
from .tournaments import Tournament

SEQUENCE_CAP = 12
TOURNAMENT_CAP = 6


class CapExceededError(Exception):
    """Requested order is past the practical enumeration limit."""


def enumerate_landau_sequences(n: int) -> List[LandauSequence]:
    """All valid score sequences of length n, ascending in the total order.

    The regular sequence comes first and the transitive sequence last.
    Generation is recursive over non-decreasing tuples with prefix-sum and
    remaining-sum pruning.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > SEQUENCE_CAP:
        raise CapExceededError(f"n={n} exceeds sequence cap {SEQUENCE_CAP}")
    total = comb(n, 2)
    found: List[tuple] = []

    def extend(prefix: List[int], prefix_sum: int) -> None:
        k = len(prefix)
        if k == n:
            if prefix_sum == total:
                found.append(tuple(prefix))
            return
        lo = prefix[-1] if prefix else 0
        for v in range(lo, n):
            k1 = k + 1
            s1 = prefix_sum + v
            if s1 < comb(k1, 2):
                continue
            if s1 + (n - k1) * v > total:
                break
            if s1 + (n - k1) * (n - 1) < total:
                continue
            prefix.append(v)
            extend(prefix, s1)
            prefix.pop()

    extend([], 0)
    found.sort(key=lambda t: t[::-1])
    return [LandauSequence(t) for t in found]


def enumerate_tournaments(n: int) -> Iterator[Tournament]:
    """All 2^C(n,2) labeled tournaments on n vertices, in arc-bitmask order.

    Bit k of the mask orients the k-th pair (i, j), i < j, in lexicographic
    pair order: set means i beats j.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > TOURNAMENT_CAP:
        raise CapExceededError(f"n={n} exceeds tournament cap {TOURNAMENT_CAP}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = np.zeros((n, n), dtype=bool)
        for bit, (i, j) in enumerate(pairs):
            if mask >> bit & 1:
                adj[i, j] = True
            else:
                adj[j, i] = True
        yield Tournament(adj)


@lru_cache(maxsize=None)
def _realizable_score_tuples(n: int) -> frozenset:
    return frozenset(
        tuple(sorted(int(x) for x in t.scores())) for t in enumerate_tournaments(n)
    )


def realizable_by_brute_force(v: ScoreVector) -> bool:
    """True iff some enumerated tournament has ``v`` as its sorted scores."""
    scores = tuple(v)
    if len(scores) > TOURNAMENT_CAP:
        raise CapExceededError(
            f"n={len(scores)} exceeds tournament cap {TOURNAMENT_CAP}"
        )
    return tuple(sorted(scores)) in _realizable_score_tuples(len(scores))


@dataclass(frozen=True)
class EnumerationStats:
    """Aggregate counts and maxima over the enumerated sequences of order n.

    ``realizable_count`` is only available within the tournament cap and, by
    Landau's theorem, always equals ``sequence_count`` there.
    """

    n: int
    sequence_count: int
    realizable_count: Optional[int]
    max_trace_length: int
    max_c: int


def stats(n: int) -> EnumerationStats:
    """Enumerate order n and aggregate trace lengths and 3-cycle counts."""
    seqs = enumerate_landau_sequences(n)
    realizable = None
    if n <= TOURNAMENT_CAP:
        realizable = sum(1 for s in seqs if realizable_by_brute_force(s.scores))
    return EnumerationStats(
        n=n,
        sequence_count=len(seqs),
        realizable_count=realizable,
        max_trace_length=max(len(down_trace(s)) for s in seqs),
        max_c=max(c_value(s) for s in seqs),
    )
