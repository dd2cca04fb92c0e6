"""Seeded random game generator for fuzzing and benchmarks."""
from __future__ import annotations

import random

from .core import GameGraph


def gen_random(n: int, d: int, W: int, density: float = 0.4, seed: int = 0, priorities=None) -> GameGraph:
    """Random game on ``n`` vertices with priorities in ``0..d-1`` and weights in ``[-W, W]``.

    Each ordered pair (self-loops included) becomes an edge with probability
    ``density``; a vertex left without successors gets one uniform target.
    ``priorities`` overrides the priority pool (e.g. ``(0, 2, 4)``).
    """
    if n < 1 or d < 1 or W < 0:
        raise ValueError("need n >= 1, d >= 1, W >= 0")
    rng = random.Random(seed)
    pool = list(priorities) if priorities is not None else list(range(d))
    owner = [rng.choice((1, 2)) for _ in range(n)]
    priority = [rng.choice(pool) for _ in range(n)]
    edges = []
    for _ in range(n):
        targets = [t for t in range(n) if rng.random() < density]
        if not targets:
            targets = [rng.randrange(n)]
        edges.append([(t, rng.randint(-W, W)) for t in targets])
    return GameGraph.build(owner, priority, edges)


def permute(g: GameGraph, order) -> GameGraph:
    """Relabel vertices so that old vertex ``order[i]`` becomes ``i``."""
    new_of = {old: new for new, old in enumerate(order)}
    return GameGraph.build(
        [g.owner[old] for old in order],
        [g.priority[old] for old in order],
        [[(new_of[t], w) for t, w in g.out_edges[old]] for old in order],
    )
