"""Score sequences: validation, the total order, the 1-norm metric, and jumps.

A score sequence is the non-decreasing vector of out-degrees of a tournament.
Landau's conditions characterize exactly which integer vectors arise this way:
every prefix sum of the sorted scores is at least C(k,2) and the total is
exactly C(n,2).  This module holds the sequence-level machinery: validation,
the total order that compares sequences from the last coordinate downward,
and three jump algorithms that walk that order one unit of score at a time.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional, Sequence, Union

#: Raw, unvalidated score input: any sequence of integers of length >= 1.
ScoreVector = Sequence[int]


class ViolationKind(enum.Enum):
    NEGATIVE = "negative"
    NOT_NON_DECREASING = "not-non-decreasing"
    PREFIX_SUM_DEFICIT = "prefix-sum-deficit"
    TOTAL_SUM_MISMATCH = "total-sum-mismatch"


@dataclass(frozen=True)
class ViolationReport:
    """First reason a score vector fails validation.

    ``index`` is the smallest 1-based position witnessing the violation.
    Checks run in a fixed order (negativity, monotonicity, prefix sums,
    total) so the report is deterministic.
    """

    kind: ViolationKind
    index: int
    observed: int
    required: int

    @property
    def message(self) -> str:
        k = self.index
        if self.kind is ViolationKind.NEGATIVE:
            return f"negative score {self.observed} at k={k}"
        if self.kind is ViolationKind.NOT_NON_DECREASING:
            return (
                f"score {self.observed} < {self.required} breaks "
                f"non-decreasing order at k={k}"
            )
        if self.kind is ViolationKind.PREFIX_SUM_DEFICIT:
            return f"prefix sum {self.observed} < {self.required} at k={k}"
        return f"total {self.observed} != {self.required}"


def first_violation(v: ScoreVector) -> Optional[ViolationReport]:
    """Return the first violation of Landau's conditions, or None if valid."""
    scores = tuple(v)
    if not scores:
        raise ValueError("score vector must have length >= 1")
    for i, s in enumerate(scores, start=1):
        if s < 0:
            return ViolationReport(ViolationKind.NEGATIVE, i, s, 0)
    for i in range(1, len(scores)):
        if scores[i] < scores[i - 1]:
            return ViolationReport(
                ViolationKind.NOT_NON_DECREASING, i + 1, scores[i], scores[i - 1]
            )
    prefix = 0
    for k, s in enumerate(scores, start=1):
        prefix += s
        if prefix < comb(k, 2):
            return ViolationReport(
                ViolationKind.PREFIX_SUM_DEFICIT, k, prefix, comb(k, 2)
            )
    n = len(scores)
    if prefix != comb(n, 2):
        return ViolationReport(ViolationKind.TOTAL_SUM_MISMATCH, n, prefix, comb(n, 2))
    return None


@dataclass(frozen=True)
class LandauSequence:
    """A non-decreasing integer tuple satisfying Landau's conditions.

    Construction re-checks the conditions, so a held instance is always a
    genuine score sequence.  Use :func:`validate_landau` to get a report
    instead of an exception for bad input.
    """

    scores: tuple

    def __post_init__(self):
        object.__setattr__(self, "scores", tuple(int(s) for s in self.scores))
        report = first_violation(self.scores)
        if report is not None:
            raise ValueError(report.message)

    @property
    def n(self) -> int:
        return len(self.scores)

    def __len__(self) -> int:
        return len(self.scores)

    def __iter__(self) -> Iterator[int]:
        return iter(self.scores)

    def __getitem__(self, i):
        return self.scores[i]

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.scores)


def validate_landau(v: ScoreVector) -> Union[LandauSequence, ViolationReport]:
    """Check Landau's conditions; return the validated sequence or a report."""
    report = first_violation(v)
    if report is not None:
        return report
    return LandauSequence(tuple(v))


def validate_strong_landau(s: LandauSequence) -> bool:
    """True iff every proper prefix sum strictly exceeds C(k,2).

    Strict prefix sums characterize the score sequences of strong
    tournaments.  n = 1 is vacuously strong.
    """
    prefix = 0
    for k in range(1, s.n):
        prefix += s.scores[k - 1]
        if prefix <= comb(k, 2):
            return False
    return True


def first_equality_index(s: LandauSequence) -> Optional[int]:
    """Smallest k < n with prefix sum exactly C(k,2), or None if strong."""
    prefix = 0
    for k in range(1, s.n):
        prefix += s.scores[k - 1]
        if prefix == comb(k, 2):
            return k
    return None


def regular_sequence(n: int) -> LandauSequence:
    """Score sequence of a regular (n odd) or nearly-regular (n even) tournament.

    This is the minimum of the total order on valid sequences of length n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2 == 1:
        return LandauSequence(((n - 1) // 2,) * n)
    half = n // 2
    return LandauSequence(((n - 2) // 2,) * half + (half,) * half)


def transitive_sequence(n: int) -> LandauSequence:
    """Score sequence (0, 1, ..., n-1) of the transitive tournament.

    This is the maximum of the total order on valid sequences of length n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return LandauSequence(tuple(range(n)))


class Order(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def compare_order(a: LandauSequence, b: LandauSequence) -> Order:
    """Compare two sequences in the total order.

    Coordinates are scanned from the last position downward; the first
    position where the sequences differ decides.
    """
    if len(a) != len(b):
        raise ValueError("sequences must have equal length")
    for x, y in zip(reversed(tuple(a)), reversed(tuple(b))):
        if x != y:
            return Order.LESS if x < y else Order.GREATER
    return Order.EQUAL


def distance(a: ScoreVector, b: ScoreVector) -> int:
    """1-norm distance between two equal-length integer vectors.

    For vectors with equal totals the result is always even.
    """
    ta, tb = tuple(a), tuple(b)
    if len(ta) != len(tb):
        raise ValueError("sequences must have equal length")
    return sum(abs(x - y) for x, y in zip(ta, tb))


class JumpAlgorithm(enum.Enum):
    DOWN = "down"
    GR_DOWN = "gr-down"
    GR_UP = "gr-up"


class AlreadyRegular(Exception):
    """Down jump requested on the regular/nearly-regular sequence."""


class AlreadyTransitive(Exception):
    """Up jump requested on the transitive sequence."""


class Converged(Exception):
    """Target-directed jump requested when already at the target."""


@dataclass(frozen=True)
class JumpStep:
    """One jump: two positions move by +1/-1, shifting the order by one jump.

    ``low`` and ``high`` are 1-based positions, matching the indices the
    algorithms are defined by.
    """

    before: LandauSequence
    after: LandauSequence
    low: int
    high: int
    algorithm: JumpAlgorithm


@dataclass(frozen=True)
class JumpTrace:
    """A chained list of jump steps from ``start`` to ``end``."""

    start: LandauSequence
    end: LandauSequence
    steps: tuple

    def __len__(self) -> int:
        return len(self.steps)

    def sequences(self) -> Iterator[LandauSequence]:
        """Yield start, then the sequence after each step."""
        yield self.start
        for step in self.steps:
            yield step.after


def down_jump_step(s: LandauSequence) -> JumpStep:
    """One jump down toward the regular sequence.

    p is the last position of the leading run of the minimum, q the first
    position of the trailing run of the maximum; position p gains 1 and
    position q loses 1.  The result stays valid and sits strictly below the
    input in the total order, two closer to the regular sequence in 1-norm.
    """
    t = s.scores
    n = len(t)
    if t == regular_sequence(n).scores:
        raise AlreadyRegular(str(s))
    p = 1
    while p < n and t[p] == t[0]:
        p += 1
    q = n
    while q > 1 and t[q - 2] == t[n - 1]:
        q -= 1
    after = list(t)
    after[p - 1] += 1
    after[q - 1] -= 1
    return JumpStep(s, LandauSequence(tuple(after)), p, q, JumpAlgorithm.DOWN)


def down_trace(s: LandauSequence) -> JumpTrace:
    """Iterate down jumps until the regular sequence; d(s, R)/2 steps."""
    steps = []
    cur = s
    target = regular_sequence(s.n)
    while cur.scores != target.scores:
        step = down_jump_step(cur)
        steps.append(step)
        cur = step.after
    return JumpTrace(s, cur, tuple(steps))


def gr_down_step(u: LandauSequence, target: LandauSequence) -> JumpStep:
    """One Griggs-Reid jump down from ``u`` toward ``target``.

    beta is the last position sharing the value of the first position where
    u falls short of the target; gamma is the first position where u exceeds
    the target.  Position beta gains 1 and position gamma loses 1.
    """
    if len(u) != len(target):
        raise ValueError("sequences must have equal length")
    if u.scores == target.scores:
        raise Converged(str(u))
    alpha = next(
        i for i, (x, y) in enumerate(zip(u.scores, target.scores), start=1) if x < y
    )
    beta = max(i for i, x in enumerate(u.scores, start=1) if x == u.scores[alpha - 1])
    gamma = next(
        i for i, (x, y) in enumerate(zip(u.scores, target.scores), start=1) if x > y
    )
    after = list(u.scores)
    after[beta - 1] += 1
    after[gamma - 1] -= 1
    return JumpStep(u, LandauSequence(tuple(after)), beta, gamma, JumpAlgorithm.GR_DOWN)


def gr_down_trace(target: LandauSequence) -> JumpTrace:
    """Jump down from the transitive sequence to ``target``; d(Tr, target)/2 steps."""
    steps = []
    cur = transitive_sequence(target.n)
    start = cur
    while cur.scores != target.scores:
        step = gr_down_step(cur, target)
        steps.append(step)
        cur = step.after
    return JumpTrace(start, cur, tuple(steps))


def up_step(s: LandauSequence) -> JumpStep:
    """One Griggs-Reid jump up toward the transitive sequence.

    k is the first position of a repeated value and m the multiplicity of
    that value; position k loses 1 and position k+m-1 gains 1.
    """
    t = s.scores
    n = len(t)
    if t == transitive_sequence(n).scores:
        raise AlreadyTransitive(str(s))
    k = next(i for i in range(1, n) if t[i - 1] == t[i])
    m = t.count(t[k - 1])
    after = list(t)
    after[k - 1] -= 1
    after[k + m - 2] += 1
    return JumpStep(s, LandauSequence(tuple(after)), k, k + m - 1, JumpAlgorithm.GR_UP)


def up_trace(s: LandauSequence) -> JumpTrace:
    """Iterate up jumps until the transitive sequence; c_value(s) steps."""
    steps = []
    cur = s
    target = transitive_sequence(s.n)
    while cur.scores != target.scores:
        step = up_step(cur)
        steps.append(step)
        cur = step.after
    return JumpTrace(s, cur, tuple(steps))


def c_value(s: LandauSequence) -> int:
    """C(n,3) minus the number of transitive triples; counts 3-cycles.

    Any tournament realizing ``s`` has exactly this many directed 3-cycles,
    and the up-jump algorithm takes exactly this many steps from ``s``.
    """
    return comb(s.n, 3) - sum(comb(x, 2) for x in s.scores)


def max_c_value(n: int) -> int:
    """Maximum of c over all valid sequences of length n, attained at R_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2 == 1:
        return (n**3 - n) // 24
    return (n**3 - 4 * n) // 24


def max_down_jumps(n: int) -> int:
    """Maximum down-trace length over valid sequences of length n.

    Equals d(R_n, Tr_n)/2: (n^2-1)/8 for odd n, (n^2-2n)/8 for even n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2 == 1:
        return (n**2 - 1) // 8
    return (n**2 - 2 * n) // 8
