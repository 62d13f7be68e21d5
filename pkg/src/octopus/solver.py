"""Perfect-play outcome solver with a transposition table."""

from __future__ import annotations

import enum
import os
import threading
from dataclasses import dataclass, field
from typing import Optional

from .position import Move, Position, Side, is_terminal, options


class Outcome(enum.Enum):
    L = "L"
    R = "R"
    N = "N"
    P = "P"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_wins(cls, left_first: bool, right_first: bool) -> "Outcome":
        if left_first and right_first:
            return cls.N
        if left_first:
            return cls.L
        if right_first:
            return cls.R
        return cls.P

    def conjugate(self) -> "Outcome":
        return {Outcome.L: Outcome.R, Outcome.R: Outcome.L}.get(self, self)


@dataclass
class SolveReport:
    position: Position
    outcome: Outcome
    left_winning_moves: list[Move]
    right_winning_moves: list[Move]
    # advisory only; excluded from equality
    nodes_expanded: int = field(default=0, compare=False)
    cache_hits: int = field(default=0, compare=False)


def _cache_limit_from_env() -> Optional[int]:
    raw = os.environ.get("OCTOPUS_CACHE_BYTES")
    if not raw:
        return None
    try:
        # rough per-entry footprint of a (Position, Side) -> bool record
        return max(1, int(raw) // 256)
    except ValueError:
        return None


class Solver:
    """Memoized win/loss search keyed on (position, side to move).

    One instance owns one unbounded table; drop the instance to free it.
    ``max_entries`` (or ``OCTOPUS_CACHE_BYTES``) makes the table clear
    itself when it grows past the cap.
    """

    def __init__(self, max_entries: Optional[int] = None):
        self._win: dict[tuple[Position, Side], bool] = {}
        self._dist: dict[tuple[Position, Side], int] = {}
        self._lock = threading.Lock()
        self.max_entries = max_entries if max_entries is not None else _cache_limit_from_env()
        self.nodes_expanded = 0
        self.cache_hits = 0

    def clear(self) -> None:
        with self._lock:
            self._win.clear()
            self._dist.clear()

    def _store(self, table: dict, key, value) -> None:
        with self._lock:
            if self.max_entries is not None and len(table) >= self.max_entries:
                table.clear()
            table[key] = value

    def win_first(self, p: Position, side: Side) -> bool:
        """True iff ``side`` moving first from ``p`` wins."""
        key = (p, side)
        hit = self._win.get(key)
        if hit is not None:
            self.cache_hits += 1
            return hit
        self.nodes_expanded += 1
        result = False
        for _, q in options(p, side):
            if not self.win_first(q, side.other):
                result = True
                break
        self._store(self._win, key, result)
        return result

    def outcome(self, p: Position) -> Outcome:
        return Outcome.from_wins(self.win_first(p, Side.LEFT), self.win_first(p, Side.RIGHT))

    def winning_moves(self, p: Position, side: Side) -> list[Move]:
        """Every move for ``side`` that leaves the opponent lost, in (attacker, target) order."""
        return [m for m, q in options(p, side) if not self.win_first(q, side.other)]

    def solve(self, p: Position) -> SolveReport:
        nodes, hits = self.nodes_expanded, self.cache_hits
        out = self.outcome(p)
        lw = self.winning_moves(p, Side.LEFT)
        rw = self.winning_moves(p, Side.RIGHT)
        return SolveReport(p, out, lw, rw, self.nodes_expanded - nodes, self.cache_hits - hits)

    def distance(self, p: Position, side: Side) -> int:
        """Plies until the game ends under optimal play with ``side`` to move.

        The winner hurries (shortest win) and the loser resists (longest loss).
        """
        key = (p, side)
        hit = self._dist.get(key)
        if hit is not None:
            return hit
        if is_terminal(p):
            d = 0
        elif self.win_first(p, side):
            d = 1 + min(self.distance(q, side.other) for _, q in options(p, side)
                        if not self.win_first(q, side.other))
        else:
            d = 1 + max(self.distance(q, side.other) for _, q in options(p, side))
        self._store(self._dist, key, d)
        return d

    def best_move(self, p: Position, side: Side) -> Optional[Move]:
        """Engine choice: fastest win if winning, else longest resistance.

        Ties go to the smallest (attacker, target).
        """
        opts = options(p, side)
        if not opts:
            return None
        winning = [(m, q) for m, q in opts if not self.win_first(q, side.other)]
        if winning:
            return min(winning, key=lambda mq: self.distance(mq[1], side.other))[0]
        # min() keeps the first of equal keys, and opts is already (attacker, target)-sorted
        return min(opts, key=lambda mq: -self.distance(mq[1], side.other))[0]


_default = Solver()


def default_solver() -> Solver:
    return _default


def win_first(p: Position, side: Side) -> bool:
    return _default.win_first(p, side)


def outcome(p: Position) -> Outcome:
    return _default.outcome(p)


def winning_moves(p: Position, side: Side) -> list[Move]:
    return _default.winning_moves(p, side)


def solve(p: Position) -> SolveReport:
    return _default.solve(p)


def reference_win_first(p: Position, side: Side) -> bool:
    """Cache-free search; exponential, for cross-checking small positions."""
    return any(not reference_win_first(q, side.other) for _, q in options(p, side))
