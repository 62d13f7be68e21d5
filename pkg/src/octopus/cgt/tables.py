"""Value grids for one-hand positions and interval scans of ``<1|1>_n``."""

from __future__ import annotations

from dataclasses import dataclass

from ..position import Position
from ..solver import Outcome
from .build import outcome_from_value, to_game
from .naming import ValueName, name_value


def value_table(n: int) -> list[list[ValueName]]:
    """``table[i-1][j-1]`` names the value of ``<i|j>_n`` (Left holds ``i``)."""
    if n < 1:
        raise ValueError("finger count must be positive")
    return [[name_value(to_game(Position((i,), (j,), n))) for j in range(1, n + 1)]
            for i in range(1, n + 1)]


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int
    value: str
    outcome: Outcome

    def label(self) -> str:
        return str(self.lo) if self.lo == self.hi else f"{self.lo}--{self.hi}"

    def to_json(self) -> dict:
        return {"from": self.lo, "to": self.hi, "value": self.value, "outcome": str(self.outcome)}


def scan_11(n_max: int) -> list[Interval]:
    """Value and outcome of ``<1|1>_n`` for ``n <= n_max``, run-length encoded."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    out: list[Interval] = []
    for n in range(1, n_max + 1):
        g = to_game(Position((1,), (1,), n))
        value, oc = name_value(g).render(), outcome_from_value(g)
        if out and out[-1].value == value and out[-1].outcome is oc and out[-1].hi == n - 1:
            last = out.pop()
            out.append(Interval(last.lo, n, value, oc))
        else:
            out.append(Interval(n, n, value, oc))
    return out
