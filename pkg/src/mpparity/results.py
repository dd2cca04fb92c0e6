"""JSON result documents emitted by the command line tool."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from .value import BOTTOM


def format_value(x) -> str:
    return "-inf" if x == BOTTOM else str(Fraction(x))


def parse_value(text: str):
    return BOTTOM if text == "-inf" else Fraction(text)


@dataclass
class ResultDocument:
    solver: str
    params: dict
    winning_region: Optional[list] = None
    values: Optional[dict] = None
    stats: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ResultDocument":
        return cls(**json.loads(text))

    @classmethod
    def for_values(cls, solver: str, params: dict, values: dict, stats: dict) -> "ResultDocument":
        return cls(solver, params, values={str(v): format_value(x) for v, x in values.items()}, stats=stats)

    def decoded_values(self) -> dict:
        return {int(v): parse_value(s) for v, s in (self.values or {}).items()}
