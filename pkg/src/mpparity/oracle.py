"""Brute-force reference solvers for small games.

Nothing here uses the decremental engine, the bounded solver or the
parity recursion of the fast path.  The "basic" solvers recompute full
mean-payoff winning regions from scratch at every iteration.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import PLAYER1, PLAYER2, GameGraph, Owner, attractor, lift_ids, subgame
from .measure import solve_static

BOTTOM = float("-inf")


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class PlayOutcome:
    prefix: tuple
    cycle: tuple
    mean: Fraction
    min_priority: int

    @property
    def mpp(self):
        return self.mean if self.min_priority % 2 == 0 else BOTTOM


def _edge_weight(g: GameGraph, u: int, v: int) -> int:
    for t, w in g.out_edges[u]:
        if t == v:
            return w
    raise ValueError(f"no edge {u}->{v}")


def outcome_eval(g: GameGraph, s1: dict, s2: dict, v0: int) -> PlayOutcome:
    """Follow two memoryless strategies from ``v0`` until the play closes a cycle."""
    pos = {}
    path = []
    v = v0
    while v not in pos:
        pos[v] = len(path)
        path.append(v)
        choice = s1 if g.owner[v] == PLAYER1 else s2
        nxt = choice[v]
        if nxt not in g.successors(v):
            raise ValueError(f"strategy picks non-successor {nxt} at {v}")
        v = nxt
    start = pos[v]
    cycle = tuple(path[start:])
    total = sum(_edge_weight(g, cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))
    return PlayOutcome(
        prefix=tuple(path[:start]),
        cycle=cycle,
        mean=Fraction(total, len(cycle)),
        min_priority=min(g.priority[u] for u in cycle),
    )


def memoryless_strategies(g: GameGraph, player: Owner):
    """All memoryless strategies of ``player`` as ``{vertex: successor}`` dicts."""
    owned = [v for v in range(g.n) if g.owner[v] == player]
    for picks in itertools.product(*(g.successors(v) for v in owned)):
        yield dict(zip(owned, picks))


def _cycle_means(succ: list, weight: list) -> list:
    # weight[v] is the weight of the edge v -> succ[v]
    n = len(succ)
    mean = [None] * n
    for s in range(n):
        if mean[s] is not None:
            continue
        seen = {}
        path = []
        v = s
        while mean[v] is None and v not in seen:
            seen[v] = len(path)
            path.append(v)
            v = succ[v]
        if mean[v] is None:
            cyc = path[seen[v]:]
            m = Fraction(sum(weight[u] for u in cyc), len(cyc))
            for u in cyc:
                mean[u] = m
            path = path[:seen[v]]
        for u in path:
            mean[u] = mean[v]
    return mean


def brute_force_mp_values(g: GameGraph, budget: int = 10**6) -> dict:
    """Mean-payoff value per vertex by enumerating all memoryless strategy pairs."""
    size = 1
    for v in range(g.n):
        size *= len(g.out_edges[v])
    if size > budget:
        raise BudgetExceeded(f"{size} strategy profiles exceed budget {budget}")
    p1 = [v for v in range(g.n) if g.owner[v] == PLAYER1]
    p2 = [v for v in range(g.n) if g.owner[v] == PLAYER2]
    best = [None] * g.n
    succ = [0] * g.n
    weight = [0] * g.n
    for c1 in itertools.product(*(g.out_edges[v] for v in p1)):
        for v, (t, w) in zip(p1, c1):
            succ[v], weight[v] = t, w
        worst = [None] * g.n
        for c2 in itertools.product(*(g.out_edges[v] for v in p2)):
            for v, (t, w) in zip(p2, c2):
                succ[v], weight[v] = t, w
            for v, m in enumerate(_cycle_means(succ, weight)):
                if worst[v] is None or m < worst[v]:
                    worst[v] = m
        for v in range(g.n):
            if best[v] is None or worst[v] > best[v]:
                best[v] = worst[v]
    return dict(enumerate(best))


def _swap_players(g: GameGraph, shift: int = 1) -> GameGraph:
    return GameGraph.build(
        [o.opponent for o in g.owner],
        [p + shift for p in g.priority],
        g.out_edges,
    )


def zielonka_parity(g: GameGraph) -> frozenset:
    """Player-1 region of the pure parity game (min priority seen infinitely often is even)."""
    win1, _ = _zielonka(g, frozenset(range(g.n)))
    return win1


def zielonka_player2(g: GameGraph) -> frozenset:
    """Player-2 region, obtained by solving the dual game with roles swapped."""
    return zielonka_parity(_swap_players(g))


def _zielonka(g: GameGraph, alive: frozenset) -> tuple[frozenset, frozenset]:
    if not alive:
        return frozenset(), frozenset()
    k = min(g.priority[v] for v in alive)
    me = PLAYER1 if k % 2 == 0 else PLAYER2
    opp = me.opponent
    while True:
        top = attractor(g, me, [v for v in alive if g.priority[v] == k], within=alive)
        w1, w2 = _zielonka(g, alive - top)
        theirs = w2 if me == PLAYER1 else w1
        if not theirs:
            mine = alive
            return (mine, frozenset()) if me == PLAYER1 else (frozenset(), mine)
        lost = attractor(g, opp, theirs, within=alive)
        alive = alive - lost
        sub1, sub2 = _zielonka(g, alive)
        if me == PLAYER1:
            return sub1, sub2 | lost
        return sub1 | lost, sub2


def _mp_region(g: GameGraph, alive: frozenset, nu) -> frozenset:
    if not alive:
        return frozenset()
    sub, _ = subgame(g, alive)
    return lift_ids(solve_static(sub, nu)[0], sorted(alive))


def basic_mp_buchi(g: GameGraph, nu) -> frozenset:
    alive = frozenset(range(g.n))
    while alive:
        reach = attractor(g, PLAYER1, [v for v in alive if g.priority[v] == 0], within=alive)
        losing = alive - reach
        if not losing:
            losing = alive - _mp_region(g, alive, nu)
            if not losing:
                break
        alive = alive - attractor(g, PLAYER2, losing, within=alive)
    return alive


def basic_mp_cobuchi(g: GameGraph, nu) -> frozenset:
    rest = frozenset(range(g.n))
    while True:
        trap = attractor(g, PLAYER2, [v for v in rest if g.priority[v] == 1], within=rest)
        won = _mp_region(g, rest - trap, nu)
        if not won:
            return frozenset(range(g.n)) - rest
        rest = rest - attractor(g, PLAYER1, won, within=rest)


def basic_mpp_threshold(g: GameGraph, nu) -> frozenset:
    """Recursive threshold solver on raw priorities with full recomputation."""
    return _basic(g, frozenset(range(g.n)), nu)


def _basic(g: GameGraph, alive: frozenset, nu) -> frozenset:
    if not alive:
        return frozenset()
    prios = {g.priority[v] for v in alive}
    k = min(prios)
    if len(prios) == 1:
        return _mp_region(g, alive, nu) if k % 2 == 0 else frozenset()
    if k % 2 == 0:
        while alive:
            reach = attractor(g, PLAYER1, [v for v in alive if g.priority[v] == k], within=alive)
            rest = alive - reach
            losing = rest - _basic(g, rest, nu)
            if not losing:
                losing = alive - _mp_region(g, alive, nu)
                if not losing:
                    return alive
            alive = alive - attractor(g, PLAYER2, losing, within=alive)
        return alive
    full = alive
    while True:
        trap = attractor(g, PLAYER2, [v for v in alive if g.priority[v] == k], within=alive)
        won = _basic(g, alive - trap, nu)
        if not won:
            return full - alive
        alive = alive - attractor(g, PLAYER1, won, within=alive)


def mp_threshold_region(values: dict, nu) -> frozenset:
    return frozenset(v for v, x in values.items() if x >= nu)
