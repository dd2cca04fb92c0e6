"""Fast-versus-oracle fuzzing with a greedy reproducer minimizer."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .core import DanglingVertexError, GameGraph, subgame
from .gamefile import format_game
from .generate import gen_random
from .oracle import BudgetExceeded, basic_mpp_threshold, brute_force_mp_values, mp_threshold_region
from .parity import solve_mpp_threshold
from .value import solve_values

THRESHOLDS = (Fraction(-1), Fraction(0), Fraction(1), Fraction(1, 2))


@dataclass
class Mismatch:
    seed: int
    reason: str
    game: str

    def as_dict(self) -> dict:
        return {"seed": self.seed, "reason": self.reason, "game": self.game}


def instance(seed: int, max_n: int, max_d: int, max_W: int) -> GameGraph:
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    d = rng.randint(1, max_d)
    W = rng.randint(0, max_W)
    density = rng.choice((0.2, 0.35, 0.5))
    return gen_random(n, d, W, density, seed=seed)


def find_mismatch(g: GameGraph, threshold_solver: Callable = solve_mpp_threshold, value_solver: Callable = solve_values) -> Optional[str]:
    """Describe the first disagreement between fast solvers and oracles, or ``None``."""
    for nu in THRESHOLDS:
        fast = threshold_solver(g, nu)
        slow = basic_mpp_threshold(g, nu)
        if fast != slow:
            return f"threshold {nu}: fast {sorted(fast)} != basic {sorted(slow)}"
    if all(p % 2 == 0 for p in g.priority):
        try:
            brute = brute_force_mp_values(g)
        except BudgetExceeded:
            return None
        for nu in THRESHOLDS:
            fast = threshold_solver(g, nu)
            if fast != mp_threshold_region(brute, nu):
                return f"threshold {nu}: fast {sorted(fast)} != brute force"
        values = value_solver(g)
        if values != brute:
            return f"values {values} != brute force {brute}"
    return None


def minimize(g: GameGraph, failing: Callable[[GameGraph], bool]) -> GameGraph:
    """Greedily drop edges and vertices while ``failing`` keeps holding."""
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            for t, _ in g.out_edges[v]:
                if len(g.out_edges[v]) < 2:
                    break
                edges = [list(e) for e in g.out_edges]
                edges[v] = [(s, w) for s, w in edges[v] if s != t]
                smaller = GameGraph.build(g.owner, g.priority, edges)
                if failing(smaller):
                    g, changed = smaller, True
                    break
            if changed:
                break
        if changed:
            continue
        for v in range(g.n):
            if g.n == 1:
                break
            try:
                smaller, _ = subgame(g, set(range(g.n)) - {v})
            except DanglingVertexError:
                continue
            if failing(smaller):
                g, changed = smaller, True
                break
    return g


def run_check(
    max_n: int,
    max_d: int,
    max_W: int,
    seeds: int,
    start: int = 0,
    threshold_solver: Callable = solve_mpp_threshold,
    value_solver: Callable = solve_values,
) -> tuple[int, Optional[Mismatch]]:
    """Check seeds ``start..start+seeds-1``; return the count checked and the first mismatch."""
    for i, seed in enumerate(range(start, start + seeds)):
        g = instance(seed, max_n, max_d, max_W)
        reason = find_mismatch(g, threshold_solver, value_solver)
        if reason is not None:
            small = minimize(g, lambda h: find_mismatch(h, threshold_solver, value_solver) is not None)
            return i + 1, Mismatch(seed, find_mismatch(small, threshold_solver, value_solver), format_game(small))
    return seeds, None
