"""Mean-payoff parity values by dichotomic search over candidate fractions.

Every finite value is a fraction ``y/z`` with ``1 <= z <= n`` and
``|y| <= z*W``.  The search splits the candidate list at its midpoint,
classifies vertices with threshold queries, and recurses on the strictly
smaller and strictly larger parts, whose values are unchanged by the
restriction.
"""
from __future__ import annotations

import bisect
import math
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .core import PLAYER1, PLAYER2, GameGraph, is_player_closed, lift_ids, subgame
from .measure import Stats
from .parity import solve_mpp_threshold

BOTTOM = -math.inf
DEFAULT_BUDGET = 5_000_000


class CapacityError(ValueError):
    """The candidate set would exceed the materialization budget."""


class CandidateSet(tuple):
    """Sorted distinct fractions ``y/z`` with ``1 <= z <= n`` and ``|y| <= z*W``."""

    n: int
    W: int

    def index(self, mu) -> int:  # type: ignore[override]
        i = bisect.bisect_left(self, mu)
        if i == len(self) or self[i] != mu:
            raise ValueError(f"{mu} not in candidate set")
        return i

    def __contains__(self, mu) -> bool:
        i = bisect.bisect_left(self, mu)
        return i < len(self) and self[i] == mu

    def successor(self, mu) -> Optional[Fraction]:
        """Next larger candidate, or ``None`` at the maximum."""
        i = self.index(mu)
        return self[i + 1] if i + 1 < len(self) else None


def candidate_set(n: int, W: int, budget: int = DEFAULT_BUDGET) -> CandidateSet:
    if n < 1:
        raise ValueError("candidate set needs n >= 1")
    raw = n * (2 * W * n + 1)
    if raw > budget:
        raise CapacityError(f"candidate set of size ~{raw} exceeds budget {budget}")
    values = {Fraction(y, z) for z in range(1, n + 1) for y in range(-z * W, z * W + 1)}
    cs = CandidateSet(sorted(values))
    cs.n, cs.W = n, W
    return cs


def threshold_at(g: GameGraph, mu, stats: Optional[Stats] = None) -> frozenset:
    """Vertices whose value is at least ``mu``.

    Weights are multiplied by the denominator of ``mu`` so the query runs
    at the integer threshold given by its numerator.
    """
    mu = Fraction(mu)
    if stats is not None:
        stats.threshold_calls += 1
    scaled = g.scaled(mu.denominator) if mu.denominator != 1 else g
    return solve_mpp_threshold(scaled, mu.numerator, stats)


def partition_at(g: GameGraph, mu, S: CandidateSet, stats: Optional[Stats] = None):
    """Split the vertices into value ``< mu``, ``== mu`` and ``> mu``.

    ``> mu`` is computed as ``>= successor(mu)``, which is exact because all
    values are candidates.  Every vertex must have a finite value.
    """
    mu = Fraction(mu)
    nxt = S.successor(mu)
    at_least = threshold_at(g, mu, stats)
    above = threshold_at(g, nxt, stats) if nxt is not None else frozenset()
    return frozenset(range(g.n)) - at_least, at_least - above, above


def solve_values(
    g: GameGraph,
    budget: int = DEFAULT_BUDGET,
    stats: Optional[Stats] = None,
    on_split: Optional[Callable[[frozenset], None]] = None,
) -> dict:
    """Value of every vertex: a ``Fraction``, or :data:`BOTTOM` when parity cannot be won.

    ``on_split`` receives (in original ids) every vertex set the search
    recurses into.
    """
    S = candidate_set(max(g.n, 1), g.max_abs_weight, budget)
    values: dict = {}
    if g.n == 0:
        return values
    finite = threshold_at(g, -g.max_abs_weight, stats)
    for v in range(g.n):
        if v not in finite:
            values[v] = BOTTOM
    if finite:
        if len(finite) < g.n:
            assert is_player_closed(g, finite, PLAYER2)
            if on_split is not None:
                on_split(finite)
        _search(g, finite, S, 0, len(S), values, stats, on_split)
    return dict(sorted(values.items()))


def _search(g, verts: frozenset, S: CandidateSet, lo: int, hi: int, values: dict, stats, on_split) -> None:
    # candidates for verts are S[lo:hi]
    if not verts:
        return
    if hi - lo <= 0:
        raise AssertionError("vertices left without candidate values")
    if hi - lo == 1:
        for v in verts:
            values[v] = S[lo]
        return
    sub, _ = subgame(g, verts)
    kept = sorted(verts)
    mid = (S[lo] + S[hi - 1]) / 2
    j = bisect.bisect_right(S, mid, lo, hi) - 1  # largest candidate <= mid
    a1 = S[j]
    if a1 == mid:
        below, equal, above = partition_at(sub, a1, S, stats)
        low_hi, high_lo = j, j + 1
        for v in equal:
            values[kept[v]] = a1
    else:
        a2 = S[j + 1]
        ge1 = threshold_at(sub, a1, stats)
        ge2 = threshold_at(sub, a2, stats)
        nxt = S[j + 2] if j + 2 < hi else None
        above = threshold_at(sub, nxt, stats) if nxt is not None else frozenset()
        below = frozenset(range(sub.n)) - ge1
        for v in ge1 - ge2:
            values[kept[v]] = a1
        for v in ge2 - above:
            values[kept[v]] = a2
        low_hi, high_lo = j, j + 2
    if above:
        assert is_player_closed(sub, above, PLAYER2), "player 2 can leave the upper part"
    if below:
        assert is_player_closed(sub, below, PLAYER1), "player 1 can leave the lower part"
    for part, a, b in ((below, lo, low_hi), (above, high_lo, hi)):
        if part:
            ids = lift_ids(part, kept)
            if on_split is not None:
                on_split(ids)
            _search(g, ids, S, a, b, values, stats, on_split)


def value_strings(values: dict) -> dict:
    return {str(v): ("-inf" if x == BOTTOM else str(x)) for v, x in values.items()}
