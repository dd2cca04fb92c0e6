"""Threshold mean-payoff Büchi and coBüchi games."""
from __future__ import annotations

from typing import Optional

from .core import PLAYER1, PLAYER2, GameGraph, attractor, is_player_closed, lift_ids, subgame
from .decremental import DecrementalState
from .measure import Stats, solve_bounded


def _check_priorities(g: GameGraph, allowed: set, name: str) -> None:
    extra = set(g.priority) - allowed
    if extra:
        raise ValueError(f"{name} game expects priorities in {sorted(allowed)}, got {sorted(extra)}")


def solve_mp_buchi(g: GameGraph, nu, stats: Optional[Stats] = None) -> frozenset:
    """Winning region for ``MP >= nu`` and infinitely many priority-0 visits.

    Repeatedly removes player-2 attractors of losing cores.  Every removal
    is a player-2 attractor, so one decremental mean-payoff state serves all
    mean-payoff queries of the run; it is created on first use.
    """
    _check_priorities(g, {0, 1}, "Büchi")
    alive = frozenset(range(g.n))
    tracker: Optional[DecrementalState] = None
    for _ in range(g.n + 1):
        if not alive:
            return frozenset()
        reach = attractor(g, PLAYER1, g.vertices_with_priority(0, alive), within=alive)
        losing = alive - reach
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
    raise AssertionError("Büchi iteration did not terminate within n rounds")


def solve_mp_cobuchi(g: GameGraph, nu, stats: Optional[Stats] = None) -> frozenset:
    """Winning region for ``MP >= nu`` and finitely many priority-1 visits.

    Each round peels off the player-1 attractor of a winning subset found
    by :func:`solve_bounded` in the part of the game that avoids priority 1.
    """
    _check_priorities(g, {1, 2}, "coBüchi")
    rest = frozenset(range(g.n))
    for _ in range(g.n + 1):
        trap = attractor(g, PLAYER2, g.vertices_with_priority(1, rest), within=rest)
        safe = rest - trap
        found = frozenset()
        if safe:
            sub, _ = subgame(g, safe)
            kept = sorted(safe)
            local = solve_bounded(sub, nu, stats)
            assert is_player_closed(sub, local, PLAYER2), "bounded region leaks a player-2 edge"
            found = lift_ids(local, kept)
        if not found:
            return frozenset(range(g.n)) - rest
        rest = rest - attractor(g, PLAYER1, found, within=rest)
    raise AssertionError("coBüchi iteration did not terminate within n rounds")
