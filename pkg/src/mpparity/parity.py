"""Threshold mean-payoff parity games with any number of priorities.

Classical recursion on the minimal priority.  Two-priority games go to
the Büchi/coBüchi solvers; in the even case the mean-payoff sub-queries
share one decremental state because that branch only ever removes
player-2 attractors.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import PLAYER1, PLAYER2, GameGraph, attractor, compress_priorities, lift_ids, subgame
from .decremental import DecrementalState
from .measure import Stats, solve_static
from .two_priority import solve_mp_buchi, solve_mp_cobuchi


@dataclass(frozen=True)
class ParityThresholdQuery:
    game: GameGraph
    nu: object = 0


def solve_mpp_threshold(g: GameGraph, nu=0, stats: Optional[Stats] = None) -> frozenset:
    """Player-1 winning region of parity and ``MP >= nu``."""
    g = compress_priorities(g)
    return _solve(g, nu, 0, g.d, stats)


def solve_query(q: ParityThresholdQuery, stats: Optional[Stats] = None) -> frozenset:
    return solve_mpp_threshold(q.game, q.nu, stats)


def _solve_restricted(g: GameGraph, keep: frozenset, nu, depth: int, d_top: int, stats) -> frozenset:
    if not keep:
        return frozenset()
    sub, _ = subgame(g, keep)
    return lift_ids(_solve(compress_priorities(sub), nu, depth + 1, d_top, stats), sorted(keep))


def _solve(g: GameGraph, nu, depth: int, d_top: int, stats: Optional[Stats]) -> frozenset:
    # g has compressed priorities here
    if g.n == 0:
        return frozenset()
    if stats is not None:
        stats.max_depth = max(stats.max_depth, depth)
    assert depth <= max(d_top - 1, 0), "recursion deeper than the priority count allows"
    levels = sorted(set(g.priority))
    k = levels[0]
    if len(levels) == 1:
        return solve_static(g, nu, stats)[0] if k % 2 == 0 else frozenset()
    if len(levels) == 2:
        return solve_mp_buchi(g, nu, stats) if k == 0 else solve_mp_cobuchi(g, nu, stats)
    if k % 2 == 0:
        return _even(g, nu, k, depth, d_top, stats)
    return _odd(g, nu, k, depth, d_top, stats)


def _even(g: GameGraph, nu, k: int, depth: int, d_top: int, stats) -> frozenset:
    alive = frozenset(range(g.n))
    tracker: Optional[DecrementalState] = None
    for _ in range(g.n + 1):
        if not alive:
            return alive
        reach = attractor(g, PLAYER1, g.vertices_with_priority(k, alive), within=alive)
        rest = alive - reach
        losing = rest - _solve_restricted(g, rest, nu, depth, d_top, stats)
        if not losing:
            if tracker is None:
                tracker = DecrementalState(g, nu, alive=alive, stats=stats)
            losing = alive - tracker.winning()
            if not losing:
                return alive
        if tracker is not None:
            tracker.delete(losing)
            alive = tracker.alive
        else:
            alive = alive - attractor(g, PLAYER2, losing, within=alive)
    raise AssertionError("even-priority loop exceeded n iterations")


def _odd(g: GameGraph, nu, k: int, depth: int, d_top: int, stats) -> frozenset:
    rest = frozenset(range(g.n))
    for _ in range(g.n + 1):
        trap = attractor(g, PLAYER2, g.vertices_with_priority(k, rest), within=rest)
        found = _solve_restricted(g, rest - trap, nu, depth, d_top, stats)
        if not found:
            return frozenset(range(g.n)) - rest
        rest = rest - attractor(g, PLAYER1, found, within=rest)
    raise AssertionError("odd-priority loop exceeded n iterations")
