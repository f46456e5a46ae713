"""Tournaments: construction, strong components, path reversal, realization.

A tournament is an orientation of the complete graph, stored here as a dense
boolean matrix where entry (i, j) means "i beats j".  The centerpiece is
:func:`realize`, which builds an explicit tournament with any prescribed
valid score sequence by running the down-jump walk on the sequence and then
replaying it in reverse as a series of path reversals starting from a
regular or nearly-regular tournament.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Iterator, List, Optional, Tuple

import numpy as np

from .sequences import (
    LandauSequence,
    regular_sequence,
    validate_landau,
)


class TournamentError(Exception):
    """Base class for tournament construction/manipulation failures."""


class SelfLoopError(TournamentError):
    pass


class DoublePairError(TournamentError):
    pass


class MissingPairError(TournamentError):
    pass


class UnreachableError(TournamentError):
    pass


class InvalidPathError(TournamentError):
    pass


class Tournament:
    """Orientation of the complete graph on n labeled vertices.

    Immutable: the adjacency matrix is frozen at construction and operations
    that change arcs return new instances.
    """

    __slots__ = ("_adj",)

    def __init__(self, adjacency):
        adj = np.array(adjacency, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        n = adj.shape[0]
        if n < 1:
            raise ValueError("tournament needs at least one vertex")
        if adj.diagonal().any():
            raise SelfLoopError("vertex beats itself")
        if (adj & adj.T).any():
            raise DoublePairError("some pair is oriented both ways")
        neither = ~(adj | adj.T)
        np.fill_diagonal(neither, False)
        if neither.any():
            raise MissingPairError("some pair has no orientation")
        adj.setflags(write=False)
        self._adj = adj

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only n x n boolean matrix; (i, j) true iff i beats j."""
        return self._adj

    def beats(self, i: int, j: int) -> bool:
        return bool(self._adj[i, j])

    def out_set(self, i: int) -> Tuple[int, ...]:
        return tuple(int(v) for v in np.flatnonzero(self._adj[i]))

    def in_set(self, i: int) -> Tuple[int, ...]:
        return tuple(int(v) for v in np.flatnonzero(self._adj[:, i]))

    def score(self, i: int) -> int:
        return int(self._adj[i].sum())

    def scores(self) -> np.ndarray:
        """Out-degree of each vertex, indexed by vertex id."""
        return self._adj.sum(axis=1)

    def arcs(self) -> Iterator[Tuple[int, int]]:
        """All arcs (winner, loser), winners ascending, losers ascending."""
        for i in range(self.n):
            for j in np.flatnonzero(self._adj[i]):
                yield i, int(j)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tournament):
            return NotImplemented
        return self._adj.shape == other._adj.shape and bool(
            (self._adj == other._adj).all()
        )

    def __hash__(self):
        return hash(self._adj.tobytes())

    def __repr__(self) -> str:
        return f"Tournament(n={self.n}, scores={self.scores().tolist()})"


@dataclass(frozen=True)
class VertexPath:
    """A simple directed path, listed vertex by vertex."""

    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        if len(self.vertices) < 2:
            raise ValueError("path needs at least two vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path repeats a vertex")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


@dataclass(frozen=True)
class StrongDecomposition:
    """Strong components in condensation order, terminal component first.

    Every vertex of a later component beats every vertex of an earlier one.
    """

    components: tuple


def from_arcs(n: int, beats: Iterable[Tuple[int, int]]) -> Tournament:
    """Build a tournament from explicit (winner, loser) pairs.

    Every unordered pair must appear exactly once, in exactly one direction.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    adj = np.zeros((n, n), dtype=bool)
    for i, j in beats:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"vertex out of range in arc ({i}, {j})")
        if i == j:
            raise SelfLoopError(f"self-loop at vertex {i}")
        if adj[j, i] or adj[i, j]:
            raise DoublePairError(f"pair {{{i}, {j}}} oriented twice")
        adj[i, j] = True
    neither = ~(adj | adj.T)
    np.fill_diagonal(neither, False)
    if neither.any():
        i, j = (int(x) for x in np.argwhere(neither)[0])
        raise MissingPairError(f"pair {{{i}, {j}}} has no orientation")
    return Tournament(adj)


def score_sequence(t: Tournament) -> LandauSequence:
    """Sorted out-degrees; always satisfies Landau's conditions."""
    result = validate_landau(sorted(int(x) for x in t.scores()))
    assert isinstance(result, LandauSequence)
    return result


def _rotational_matrix(n: int) -> np.ndarray:
    # n odd: vertex i beats i+1, ..., i+(n-1)/2 (mod n)
    adj = np.zeros((n, n), dtype=bool)
    idx = np.arange(n)
    for x in range(1, (n - 1) // 2 + 1):
        adj[idx, (idx + x) % n] = True
    return adj


def _nearly_regular_matrix(n: int) -> np.ndarray:
    # n even: delete the last vertex of the rotational (n+1)-tournament,
    # then relabel so scores are non-decreasing in vertex id
    adj = _rotational_matrix(n + 1)[:n, :n].copy()
    perm = np.argsort(adj.sum(axis=1), kind="stable")
    return adj[np.ix_(perm, perm)]


def rotational_regular(n: int) -> Tournament:
    """Regular tournament on odd n: vertex i beats the next (n-1)/2 vertices mod n."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd and >= 1")
    return Tournament(_rotational_matrix(n))


def nearly_regular(n: int) -> Tournament:
    """Nearly-regular tournament on even n.

    Deletes the highest-labeled vertex of the rotational regular
    (n+1)-tournament, then relabels vertices in non-decreasing score order
    so vertex i carries the i-th sorted score.
    """
    if n < 2 or n % 2 == 1:
        raise ValueError("n must be even and >= 2")
    return Tournament(_nearly_regular_matrix(n))


def strong_components(t: Tournament) -> StrongDecomposition:
    """Strong components in condensation order, terminal component first."""
    n = t.n
    adj = t.adjacency
    succ = [np.flatnonzero(adj[i]) for i in range(n)]
    pred = [np.flatnonzero(adj[:, i]) for i in range(n)]

    # Kosaraju, iterative
    visited = [False] * n
    finish: List[int] = []
    for root in range(n):
        if visited[root]:
            continue
        stack = [(root, 0)]
        visited[root] = True
        while stack:
            v, idx = stack.pop()
            neighbors = succ[v]
            while idx < len(neighbors):
                w = int(neighbors[idx])
                idx += 1
                if not visited[w]:
                    stack.append((v, idx))
                    stack.append((w, 0))
                    visited[w] = True
                    break
            else:
                finish.append(v)

    assigned = [False] * n
    components = []
    for v in reversed(finish):
        if assigned[v]:
            continue
        comp = [v]
        assigned[v] = True
        stack = [v]
        while stack:
            u = stack.pop()
            for w in pred[u]:
                w = int(w)
                if not assigned[w]:
                    assigned[w] = True
                    comp.append(w)
                    stack.append(w)
        components.append(tuple(sorted(comp)))

    # In a tournament the condensation is a total order; a single arc
    # between representatives decides which component dominates.
    def dominated_first(a, b):
        return -1 if t.beats(b[0], a[0]) else 1

    components.sort(key=cmp_to_key(dominated_first))
    return StrongDecomposition(tuple(components))


def is_strong(t: Tournament) -> bool:
    """True iff there is a directed path between every ordered vertex pair."""
    return len(strong_components(t).components) == 1


def _shortest_path(adj: np.ndarray, src: int, dst: int) -> Optional[List[int]]:
    """Shortest src -> dst path by BFS; smallest-id parents break ties."""
    if adj[src, dst]:
        return [src, dst]
    n = adj.shape[0]
    mid = np.flatnonzero(adj[src] & adj[:, dst])
    if mid.size:
        return [src, int(mid[0]), dst]
    parent = np.full(n, -1, dtype=np.int64)
    visited = np.zeros(n, dtype=bool)
    visited[src] = True
    frontier = [src]
    while True:
        new = np.zeros(n, dtype=bool)
        for f in frontier:
            fresh = adj[f] & ~visited & ~new
            if fresh.any():
                parent[fresh] = f
                new |= fresh
        if not new.any():
            return None
        visited |= new
        if new[dst]:
            break
        frontier = [int(v) for v in np.flatnonzero(new)]
    path = [dst]
    while path[-1] != src:
        path.append(int(parent[path[-1]]))
    path.reverse()
    return path


def find_path(t: Tournament, src: int, dst: int) -> VertexPath:
    """Shortest directed path from src to dst, deterministic tie-breaking."""
    if not (0 <= src < t.n and 0 <= dst < t.n):
        raise ValueError("vertex out of range")
    if src == dst:
        raise ValueError("path endpoints must differ")
    path = _shortest_path(t.adjacency, src, dst)
    if path is None:
        raise UnreachableError(f"no path from {src} to {dst}")
    return VertexPath(tuple(path))


def _flip_path(adj: np.ndarray, path: List[int]) -> None:
    for a, b in zip(path, path[1:]):
        adj[a, b] = False
        adj[b, a] = True


def reverse_path(t: Tournament, path: VertexPath) -> Tournament:
    """Reverse every arc along the path; first vertex loses 1, last gains 1."""
    adj = t.adjacency.copy()
    for a, b in zip(path.vertices, path.vertices[1:]):
        if not adj[a, b]:
            raise InvalidPathError(f"({a}, {b}) is not an arc")
    _flip_path(adj, list(path.vertices))
    return Tournament(adj)


def _down_jump_indices(scores: Tuple[int, ...]) -> List[Tuple[int, int]]:
    """1-based (p, q) index pairs of the down-jump walk to the regular sequence.

    Works on a mutable array with binary searches, so long walks on large n
    stay cheap; the rule is the same one down_jump_step implements.
    """
    arr = np.array(scores, dtype=np.int64)
    n = arr.size
    target = np.array(regular_sequence(n).scores, dtype=np.int64)
    remaining = int(np.abs(arr - target).sum())
    steps: List[Tuple[int, int]] = []
    while remaining > 0:
        p = int(np.searchsorted(arr, arr[0], side="right"))
        q = int(np.searchsorted(arr, arr[-1], side="left")) + 1
        arr[p - 1] += 1
        arr[q - 1] -= 1
        remaining -= 2
        steps.append((p, q))
    return steps


def _base_matrix(n: int) -> np.ndarray:
    return _rotational_matrix(n) if n % 2 == 1 else _nearly_regular_matrix(n)


def realize(s: LandauSequence) -> Tournament:
    """Construct a tournament whose sorted scores equal ``s``.

    Runs the down-jump walk from s to the regular sequence, starts from the
    rotational regular (or nearly-regular) tournament, and replays the walk
    in reverse: for each jump with positions (p, q), reverse a shortest path
    from vertex p-1 to vertex q-1.  Vertex i always carries the i-th sorted
    score, so the output has score s_i at vertex i.
    """
    n = s.n
    steps = _down_jump_indices(s.scores)
    adj = _base_matrix(n)
    for p, q in reversed(steps):
        path = _shortest_path(adj, p - 1, q - 1)
        assert path is not None, "intermediate tournament must be strong"
        _flip_path(adj, path)
    return Tournament(adj)


def realize_stages(s: LandauSequence) -> List[Tournament]:
    """All intermediate tournaments of :func:`realize`, regular end first.

    The returned list runs from the starting regular/nearly-regular
    tournament down to the realization of ``s``; every entry except possibly
    the last is strong.
    """
    n = s.n
    steps = _down_jump_indices(s.scores)
    adj = _base_matrix(n)
    stages = [Tournament(adj.copy())]
    for p, q in reversed(steps):
        path = _shortest_path(adj, p - 1, q - 1)
        assert path is not None, "intermediate tournament must be strong"
        _flip_path(adj, path)
        stages.append(Tournament(adj.copy()))
    return stages


def count_3cycles(t: Tournament) -> int:
    """Number of cyclic triples, counted directly from the arc structure."""
    a = t.adjacency.astype(np.int64)
    return int(np.trace(a @ a @ a)) // 3
