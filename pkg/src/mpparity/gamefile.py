"""Text format for weighted parity games.

::

    mpg <n>;
    <id> <owner> <priority> <succ>:<w>[,<succ>:<w>...];

Owner is 1 or 2, ``#`` starts a comment, one vertex per line.
"""
from __future__ import annotations

import re

from .core import GameGraph, validate


class GameFormatError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


_HEADER = re.compile(r"\s*mpg\s+(\d+)\s*;\s*$")
_VERTEX = re.compile(r"\s*(\d+)\s+(\S+)\s+(\S+)(?:\s+(.*?))?\s*;\s*$")
_EDGE = re.compile(r"\s*(\d+)\s*:\s*([+-]?\d+)\s*$")


def parse_game(text: str) -> GameGraph:
    header = None
    rows: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        if header is None:
            m = _HEADER.match(line)
            if not m:
                raise GameFormatError("expected header 'mpg <n>;'", lineno, col)
            header = int(m.group(1))
            continue
        m = _VERTEX.match(line)
        if not m:
            raise GameFormatError("expected '<id> <owner> <priority> <succ>:<w>,...;'", lineno, col)
        vid = int(m.group(1))
        if vid in rows:
            raise GameFormatError(f"duplicate vertex id {vid}", lineno, m.start(1) + 1)
        if not 0 <= vid < header:
            raise GameFormatError(f"vertex id {vid} outside 0..{header - 1}", lineno, m.start(1) + 1)
        if m.group(2) not in ("1", "2"):
            raise GameFormatError(f"owner must be 1 or 2, got {m.group(2)!r}", lineno, m.start(2) + 1)
        if not m.group(3).isdigit():
            raise GameFormatError(f"priority must be a natural number, got {m.group(3)!r}", lineno, m.start(3) + 1)
        edges = []
        if m.group(4):
            offset = m.start(4)
            for part in m.group(4).split(","):
                e = _EDGE.match(part)
                if not e:
                    raise GameFormatError(f"bad edge {part.strip()!r}", lineno, offset + 1)
                t, w = int(e.group(1)), int(e.group(2))
                if not 0 <= t < header:
                    raise GameFormatError(f"dangling edge target {t} from vertex {vid}", lineno, offset + 1)
                if any(t == s for s, _ in edges):
                    raise GameFormatError(f"parallel edge {vid}->{t}", lineno, offset + 1)
                edges.append((t, w))
                offset += len(part) + 1
        if not edges:
            raise GameFormatError(f"vertex {vid} has no successors", lineno, col)
        rows[vid] = (int(m.group(2)), int(m.group(3)), edges)
    if header is None:
        raise GameFormatError("empty input, expected header 'mpg <n>;'")
    missing = [v for v in range(header) if v not in rows]
    if missing:
        raise GameFormatError(f"vertex {missing[0]} is not declared")
    g = GameGraph.build(
        [rows[v][0] for v in range(header)],
        [rows[v][1] for v in range(header)],
        [rows[v][2] for v in range(header)],
    )
    problem = validate(g)
    if problem:
        raise GameFormatError(problem)
    return g


def format_game(g: GameGraph) -> str:
    lines = [f"mpg {g.n};"]
    for v in range(g.n):
        edges = ",".join(f"{t}:{w}" for t, w in g.out_edges[v])
        lines.append(f"{v} {int(g.owner[v])} {g.priority[v]} {edges};")
    return "\n".join(lines) + "\n"
