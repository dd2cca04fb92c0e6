"""Game graphs, attractors and induced subgames.

Vertices are dense integers ``0..n-1``.  Vertex sets are plain frozensets;
every algorithm in the package works on ids and restricts games through
:func:`subgame`, which re-densifies ids.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Optional, Sequence

VertexSet = frozenset


class Owner(IntEnum):
    PLAYER1 = 1
    PLAYER2 = 2

    @property
    def opponent(self) -> "Owner":
        return Owner.PLAYER2 if self is Owner.PLAYER1 else Owner.PLAYER1


PLAYER1 = Owner.PLAYER1
PLAYER2 = Owner.PLAYER2


class DanglingVertexError(ValueError):
    """A kept vertex has no successor inside the kept set."""


@dataclass(frozen=True)
class GameGraph:
    """Weighted two-player game graph with a priority per vertex.

    ``out_edges[v]`` is a tuple of ``(target, weight)`` pairs and
    ``in_edges[v]`` the matching ``(source, weight)`` pairs.  Use
    :meth:`build` to derive the reverse adjacency and the weight bound.
    """

    owner: tuple
    priority: tuple
    out_edges: tuple
    in_edges: tuple
    max_abs_weight: int

    @classmethod
    def build(
        cls,
        owner: Sequence[int],
        priority: Sequence[int],
        out_edges: Sequence[Iterable[tuple[int, int]]],
    ) -> "GameGraph":
        out = tuple(tuple((int(t), int(w)) for t, w in edges) for edges in out_edges)
        ins: list[list[tuple[int, int]]] = [[] for _ in out]
        for v, edges in enumerate(out):
            for t, w in edges:
                if 0 <= t < len(out):
                    ins[t].append((v, w))
        bound = max((abs(w) for edges in out for _, w in edges), default=0)
        return cls(
            owner=tuple(Owner(o) for o in owner),
            priority=tuple(int(p) for p in priority),
            out_edges=out,
            in_edges=tuple(tuple(e) for e in ins),
            max_abs_weight=bound,
        )

    @property
    def n(self) -> int:
        return len(self.owner)

    @property
    def m(self) -> int:
        return sum(len(e) for e in self.out_edges)

    @property
    def d(self) -> int:
        """Number of distinct priorities."""
        return len(set(self.priority))

    @property
    def vertices(self) -> frozenset:
        return frozenset(range(self.n))

    def successors(self, v: int) -> list[int]:
        return [t for t, _ in self.out_edges[v]]

    def with_priorities(self, priority: Sequence[int]) -> "GameGraph":
        return GameGraph(self.owner, tuple(priority), self.out_edges, self.in_edges, self.max_abs_weight)

    def scaled(self, factor: int) -> "GameGraph":
        """Copy with every weight multiplied by ``factor``."""
        return GameGraph.build(
            self.owner,
            self.priority,
            [[(t, w * factor) for t, w in edges] for edges in self.out_edges],
        )

    def vertices_with_priority(self, k: int, within: Optional[Iterable[int]] = None) -> frozenset:
        pool = range(self.n) if within is None else within
        return frozenset(v for v in pool if self.priority[v] == k)


def validate(g: GameGraph) -> Optional[str]:
    """Return a description of the first violated invariant, or ``None``."""
    n = g.n
    if len(g.priority) != n or len(g.out_edges) != n or len(g.in_edges) != n:
        return "length mismatch between owner, priority and edge tables"
    for v in range(n):
        if g.owner[v] not in (PLAYER1, PLAYER2):
            return f"bad owner at vertex {v}"
        if g.priority[v] < 0:
            return f"negative priority at vertex {v}"
        if not g.out_edges[v]:
            return f"sink vertex {v}"
        seen = set()
        for t, w in g.out_edges[v]:
            if not 0 <= t < n:
                return f"dangling edge {v}->{t}"
            if t in seen:
                return f"parallel edge {v}->{t}"
            seen.add(t)
            if abs(w) > g.max_abs_weight:
                return f"weight bound: |{w}| > {g.max_abs_weight} on edge {v}->{t}"
    actual = max((abs(w) for edges in g.out_edges for _, w in edges), default=0)
    if actual != g.max_abs_weight:
        return f"weight bound: declared {g.max_abs_weight}, actual maximum {actual}"
    forward = sorted((v, t, w) for v in range(n) for t, w in g.out_edges[v])
    backward = sorted((s, v, w) for v in range(n) for s, w in g.in_edges[v])
    if forward != backward:
        return "transpose mismatch between out_edges and in_edges"
    return None


def attractor(
    g: GameGraph,
    player: Owner,
    target: Iterable[int],
    within: Optional[Iterable[int]] = None,
) -> frozenset:
    """Vertices from which ``player`` can force a visit to ``target``.

    With ``within`` the computation happens in the subgame induced by that
    set; ``target`` is intersected with it.  Backward traversal with
    per-vertex counters of successors not yet attracted.
    """
    if within is None:
        alive = None
        result = set(target)
    else:
        alive = within if isinstance(within, (set, frozenset)) else set(within)
        result = {v for v in target if v in alive}
    remaining: dict[int, int] = {}
    queue = deque(result)
    out_edges, in_edges, owner = g.out_edges, g.in_edges, g.owner
    while queue:
        v = queue.popleft()
        for u, _ in in_edges[v]:
            if u in result or (alive is not None and u not in alive):
                continue
            if owner[u] == player:
                result.add(u)
                queue.append(u)
                continue
            left = remaining.get(u)
            if left is None:
                if alive is None:
                    left = len(out_edges[u])
                else:
                    left = sum(1 for t, _ in out_edges[u] if t in alive)
            left -= 1
            remaining[u] = left
            if left == 0:
                result.add(u)
                queue.append(u)
    return frozenset(result)


def subgame(g: GameGraph, keep: Iterable[int]) -> tuple[GameGraph, dict]:
    """Induced game on ``keep`` with ids re-densified in increasing order.

    Returns the new game and the old->new id mapping.  The inverse mapping
    is ``sorted(keep)``.
    """
    kept = sorted(set(keep))
    index = {old: new for new, old in enumerate(kept)}
    out = []
    for old in kept:
        edges = [(index[t], w) for t, w in g.out_edges[old] if t in index]
        if not edges:
            raise DanglingVertexError(f"dangling vertex {old}: no successor inside the kept set")
        out.append(edges)
    sub = GameGraph.build([g.owner[v] for v in kept], [g.priority[v] for v in kept], out)
    return sub, index


def lift_ids(ids: Iterable[int], kept: Sequence[int]) -> frozenset:
    """Map subgame ids back to the parent game (``kept`` = ``sorted(keep)``)."""
    return frozenset(kept[v] for v in ids)


def is_player_closed(g: GameGraph, region: Iterable[int], player: Owner, within: Optional[Iterable[int]] = None) -> bool:
    """True iff no ``player`` vertex of ``region`` has an edge leaving it (inside ``within``)."""
    region = set(region)
    alive = None if within is None else set(within)
    for v in region:
        if g.owner[v] != player:
            continue
        for t, _ in g.out_edges[v]:
            if t not in region and (alive is None or t in alive):
                return False
    return True


def compress_priorities(g: GameGraph) -> GameGraph:
    """Relabel priorities densely from 0 or 1, keeping order and parity.

    Adjacent distinct priorities of equal parity collapse to one label, so
    the result has the smallest possible number of priorities.
    """
    relabel = {}
    label = None
    for p in sorted(set(g.priority)):
        if label is None:
            label = p % 2
        elif label % 2 != p % 2:
            label += 1
        relabel[p] = label
    return g.with_priorities([relabel[p] for p in g.priority])


def parse_rational(text) -> Fraction:
    """Exact rational from ``"y/z"``, an integer string, or a number."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, float):
        raise TypeError("floats are not accepted as exact thresholds")
    return Fraction(str(text).strip())
