"""Text play against the perfect-play engine."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Optional

from .position import Move, Position, Side, apply_move, options, render
from .solver import Solver, default_solver

_MOVE = re.compile(r"^\s*(\d+)\s*>\s*(\d+)\s*$")


@dataclass
class ReplState:
    current: Position
    mover: Side
    human: Side
    history: list[tuple[Move, Position]] = field(default_factory=list)
    start: Optional[Position] = None
    winner: Optional[Side] = None

    def __post_init__(self) -> None:
        if self.start is None:
            self.start = self.current

    def replay(self) -> Position:
        p = self.start
        for move, _ in self.history:
            p = apply_move(p, move)
        return p


def parse_move(text: str, side: Side) -> Optional[Move]:
    m = _MOVE.match(text)
    if m is None:
        return None
    return Move(side, int(m.group(1)), int(m.group(2)))


def play_session(
    start: Position,
    human: Side,
    first: Side = Side.LEFT,
    read: Callable[[str], str] = input,
    write: Callable[[str], None] = print,
    solver: Optional[Solver] = None,
) -> ReplState:
    """Alternate human and engine moves until someone cannot move.

    Human moves are typed ``a>t`` (attacking value, target value); ``quit``
    ends the session early.
    """
    solver = solver or default_solver()
    state = ReplState(start, first, human)
    while True:
        p, mover = state.current, state.mover
        legal = options(p, mover)
        write(f"{render(p)}  [{mover} to move]")
        if not legal:
            state.winner = mover.other
            write(f"{mover} cannot move and loses; {mover.other} wins.")
            return state
        if mover is human:
            try:
                line = read("your move (a>t): ")
            except EOFError:
                write("session closed.")
                return state
            if line.strip().lower() in ("q", "quit", "exit"):
                return state
            move = parse_move(line, mover)
            allowed = {(m.attacker, m.target): q for m, q in legal}
            if move is None or (move.attacker, move.target) not in allowed:
                write("illegal move; legal moves: " + ", ".join(str(m) for m, _ in legal))
                continue
            nxt = allowed[(move.attacker, move.target)]
        else:
            move = solver.best_move(p, mover)
            nxt = apply_move(p, move)
            write(f"engine ({mover}) plays {move}")
        state.history.append((move, nxt))
        state.current = nxt
        state.mover = mover.other
