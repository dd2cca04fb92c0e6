"""Energy progress measures for threshold mean-payoff games.

A measure maps each vertex to ``0..top`` or :data:`TOP`.  Weights are first
shifted by the threshold ``y/z`` into integers ``z*w - y``, so the
threshold problem ``MP >= y/z`` becomes ``MP >= 0`` on the shifted game.
Vertices whose least consistent measure stays below :data:`TOP` are exactly
the player-1 winning vertices.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .core import PLAYER1, GameGraph

TOP = math.inf


@dataclass
class Stats:
    """Instrumentation shared by the solvers (all counters are cumulative)."""

    lifts: int = 0
    static_solves: int = 0
    bounded_rounds: list = field(default_factory=list)
    threshold_calls: int = 0
    max_depth: int = 0

    def as_dict(self) -> dict:
        return {
            "lifts": self.lifts,
            "static_solves": self.static_solves,
            "bounded_rounds": [list(r) for r in self.bounded_rounds],
            "threshold_calls": self.threshold_calls,
            "max_depth": self.max_depth,
        }


@dataclass(frozen=True)
class ShiftedWeights:
    """Per-edge integer weights ``scale*w - offset`` aligned with ``out_edges``."""

    weights: tuple
    offset: int
    scale: int
    effective_max: int


def shift_weights(g: GameGraph, nu) -> ShiftedWeights:
    nu = Fraction(nu)
    y, z = nu.numerator, nu.denominator
    weights = tuple(tuple(z * w - y for _, w in edges) for edges in g.out_edges)
    wmax = max((abs(w) for row in weights for w in row), default=0)
    return ShiftedWeights(weights, y, z, wmax)


def ominus(a, b: int, top: int):
    """``a`` minus ``b`` clamped below at 0; :data:`TOP` once it exceeds ``top``."""
    if a == TOP:
        return TOP
    r = a - b
    if r > top:
        return TOP
    return r if r > 0 else 0


def lift(f: Sequence, v: int, g: GameGraph, weights: Sequence[Sequence[int]], top: int, alive=None):
    """New measure value for ``v``: min over successors for player 1, max for player 2."""
    values = [
        ominus(f[t], w, top)
        for (t, _), w in zip(g.out_edges[v], weights[v])
        if alive is None or alive[t]
    ]
    return min(values) if g.owner[v] == PLAYER1 else max(values)


def is_consistent(f: Sequence, v: int, g: GameGraph, weights: Sequence[Sequence[int]], top: int, alive=None) -> bool:
    return f[v] >= lift(f, v, g, weights, top, alive)


class ProgressMeasure:
    """Mutable measure with a FIFO worklist and a lift counter.

    ``alive`` (a list of booleans) restricts the game to a vertex subset
    without copying it; edges to dead vertices are ignored.
    """

    def __init__(
        self,
        g: GameGraph,
        weights: Sequence[Sequence[int]],
        top: int,
        alive: Optional[Iterable[int]] = None,
        initial: Optional[Sequence] = None,
    ):
        self.game = g
        self.weights = weights
        self.top = top
        if alive is None:
            self.alive = [True] * g.n
        else:
            self.alive = [False] * g.n
            for v in alive:
                self.alive[v] = True
        self.f = list(initial) if initial is not None else [0] * g.n
        self.queue: deque = deque()
        self.in_queue = [False] * g.n
        self.lift_count = 0

    def value_for(self, v: int):
        # inlined lift(); this is the hot loop
        top, f, alive = self.top, self.f, self.alive
        player1 = self.game.owner[v] == PLAYER1
        best = None
        for (t, _), w in zip(self.game.out_edges[v], self.weights[v]):
            if not alive[t]:
                continue
            a = f[t]
            if a != TOP:
                a -= w
                if a > top:
                    a = TOP
                elif a < 0:
                    a = 0
            if best is None:
                best = a
            elif player1:
                if a < best:
                    best = a
                    if best == 0:
                        break
            elif a > best:
                best = a
                if best == TOP:
                    break
        return best

    def consistent(self, v: int) -> bool:
        return self.f[v] >= self.value_for(v)

    def push(self, v: int) -> None:
        if not self.in_queue[v]:
            self.in_queue[v] = True
            self.queue.append(v)

    def seed(self, candidates: Optional[Iterable[int]] = None) -> None:
        """Enqueue every inconsistent alive vertex among ``candidates`` (default: all)."""
        pool = range(self.game.n) if candidates is None else candidates
        for v in pool:
            if self.alive[v] and self.f[v] != TOP and not self.consistent(v):
                self.push(v)

    def run(self) -> "ProgressMeasure":
        """Lift until the worklist is empty; every alive vertex is then consistent."""
        f, alive, in_edges = self.f, self.alive, self.game.in_edges
        queue, in_queue = self.queue, self.in_queue
        while queue:
            v = queue.popleft()
            in_queue[v] = False
            if not alive[v]:
                continue
            new = self.value_for(v)
            if new <= f[v]:
                continue
            f[v] = new
            self.lift_count += 1
            for u, _ in in_edges[v]:
                if alive[u] and not in_queue[u] and f[u] != TOP and f[u] < self.value_for(u):
                    in_queue[u] = True
                    queue.append(u)
        return self

    def winning(self) -> frozenset:
        return frozenset(v for v in range(self.game.n) if self.alive[v] and self.f[v] != TOP)

    def inconsistent(self) -> list:
        return [v for v in range(self.game.n) if self.alive[v] and not self.consistent(v)]


def run_worklist(state: ProgressMeasure) -> ProgressMeasure:
    return state.run()


def solve_static(g: GameGraph, nu, stats: Optional[Stats] = None) -> tuple[frozenset, ProgressMeasure]:
    """Player-1 winning region of ``MP >= nu`` together with the final measure."""
    shifted = shift_weights(g, nu)
    pm = ProgressMeasure(g, shifted.weights, g.n * shifted.effective_max)
    pm.seed()
    pm.run()
    if stats is not None:
        stats.lifts += pm.lift_count
        stats.static_solves += 1
    return pm.winning(), pm


def solve_bounded(g: GameGraph, nu, stats: Optional[Stats] = None) -> frozenset:
    """A nonempty subset of the ``MP >= nu`` winning region, or the empty set.

    Runs the worklist with top ``i*W'`` for ``i = 1, 2, 4, ...`` (clamped to
    ``n``) and stops at the first round that certifies any vertex, so the
    work is proportional to the size of the returned set.  Each round starts
    from the zero measure.
    """
    shifted = shift_weights(g, nu)
    n = g.n
    i = 1
    while True:
        pm = ProgressMeasure(g, shifted.weights, i * shifted.effective_max)
        pm.seed()
        pm.run()
        found = pm.winning()
        if stats is not None:
            stats.lifts += pm.lift_count
            stats.bounded_rounds.append((i, pm.top, pm.lift_count, len(found)))
        if found or i >= n:
            return found
        i = min(2 * i, n)
