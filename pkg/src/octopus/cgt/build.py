"""Game trees of Octopus positions."""

from __future__ import annotations

from ..position import Position, Side, is_terminal, options, rank
from ..solver import Outcome
from .game import ZERO, Game, canonical_from, canonicalize, outcome_sign

_position_memo: dict[Position, Game] = {}


def to_game(p: Position) -> Game:
    """Canonical game value of ``p``; a handless side makes the game ``{ | }``.

    Built bottom-up over the reachable positions, in rank order, so deep option chains do
    not exhaust the interpreter stack.
    """
    hit = _position_memo.get(p)
    if hit is not None:
        return hit
    seen = {p}
    stack = [p]
    while stack:
        q = stack.pop()
        for side in (Side.LEFT, Side.RIGHT):
            for _, child in options(q, side):
                if child not in seen and child not in _position_memo:
                    seen.add(child)
                    stack.append(child)
    # every move strictly lowers the rank, so ascending rank puts children first
    order = sorted(seen, key=rank)
    for q in order:
        if q in _position_memo:
            continue
        if is_terminal(q):
            _position_memo[q] = ZERO
            continue
        left = [_position_memo[c] for _, c in options(q, Side.LEFT)]
        right = [_position_memo[c] for _, c in options(q, Side.RIGHT)]
        _position_memo[q] = canonical_from(left, right)
    return _position_memo[p]


def outcome_from_value(g: Game) -> Outcome:
    return Outcome(outcome_sign(canonicalize(g)))
