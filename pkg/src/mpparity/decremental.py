"""Threshold mean-payoff winning regions under player-2 attractor deletions.

The progress measure only grows when a player-2 attractor is removed, so
one measure is kept for the whole deletion sequence and each round only
re-lifts vertices that lost an edge.  Total lift work over any sequence is
bounded by ``n * (top + 1)``.
"""
from __future__ import annotations

from typing import Iterable, Optional

from .core import PLAYER2, GameGraph, attractor
from .measure import ProgressMeasure, Stats, shift_weights


class DecrementalState:
    """Maintains ``W1(MP >= nu)`` of ``g`` restricted to the alive vertices.

    ``alive`` defaults to all vertices; passing a subset starts from the
    induced subgame (it must be a legal subgame).  With ``debug=True`` every
    round checks that the worklist holds all inconsistent vertices before
    lifting and that no surviving vertex's measure went down.
    """

    def __init__(self, g: GameGraph, nu, alive: Optional[Iterable[int]] = None, debug: bool = False, stats: Optional[Stats] = None):
        self.game = g
        self.nu = nu
        self.debug = debug
        self.stats = stats
        alive_set = set(range(g.n)) if alive is None else set(alive)
        self.alive_set = alive_set
        shifted = shift_weights(g, nu)
        self.shifted = shifted
        self.measure = ProgressMeasure(g, shifted.weights, len(alive_set) * shifted.effective_max, alive=alive_set)
        self.measure.seed()
        self.measure.run()
        self.rounds = 0
        self.exhausted = not alive_set
        self._account(self.measure.lift_count)
        if stats is not None:
            stats.static_solves += 1

    @property
    def lift_count(self) -> int:
        return self.measure.lift_count

    @property
    def alive(self) -> frozenset:
        return frozenset(self.alive_set)

    def _account(self, lifts: int) -> None:
        if self.stats is not None:
            self.stats.lifts += lifts

    def winning(self) -> frozenset:
        return self.measure.winning()

    def delete(self, core: Iterable[int]) -> frozenset:
        """Remove the player-2 attractor of ``core`` and return the new winning region."""
        core = set(core)
        if not core <= self.alive_set:
            raise ValueError("deletion core contains vertices that are not alive")
        if not core:
            return self.winning()
        pm = self.measure
        removed = attractor(self.game, PLAYER2, core, within=self.alive_set)
        before = list(pm.f) if self.debug else None
        for v in removed:
            pm.alive[v] = False
        self.alive_set -= removed
        self.rounds += 1
        if not self.alive_set:
            self.exhausted = True
            return frozenset()
        # only player-1 vertices can have edges into a player-2 attractor
        boundary = {u for v in removed for u, _ in self.game.in_edges[v] if pm.alive[u]}
        pm.seed(sorted(boundary))
        if self.debug:
            missing = [v for v in pm.inconsistent() if not pm.in_queue[v]]
            assert not missing, f"inconsistent vertices not queued: {missing}"
        lifts = pm.lift_count
        pm.run()
        self._account(pm.lift_count - lifts)
        if self.debug:
            assert all(pm.f[v] >= before[v] for v in self.alive_set), "measure decreased"
            assert not pm.inconsistent()
        return self.winning()


def dec_init(g: GameGraph, nu, **kwargs) -> DecrementalState:
    return DecrementalState(g, nu, **kwargs)


def dec_delete(state: DecrementalState, core: Iterable[int]) -> frozenset:
    return state.delete(core)


def dec_winning(state: DecrementalState) -> frozenset:
    return state.winning()
