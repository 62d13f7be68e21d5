"""Octopus positions: representation, parsing, move generation.

A position holds two sorted hand lists and a finger count ``n``.  Left's
hands are ``left``, Right's are ``right``.  An attack adds the attacking
hand's value to the target hand; a target exceeding ``n`` is removed.
"""

from __future__ import annotations

import enum
import re
from bisect import insort
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

MAX_FINGERS = 2**31 - 1


class ParseError(ValueError):
    """Raised for malformed position text."""


class Side(enum.Enum):
    LEFT = "L"
    RIGHT = "R"

    @property
    def other(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT

    def __str__(self) -> str:
        return self.name.capitalize()

    @classmethod
    def from_name(cls, name: str) -> "Side":
        key = name.strip().lower()
        if key in ("l", "left"):
            return cls.LEFT
        if key in ("r", "right"):
            return cls.RIGHT
        raise ValueError(f"unknown side {name!r}")


class Rank(NamedTuple):
    """Termination measure, compared lexicographically."""

    hands: int
    slack: int


@dataclass(frozen=True)
class Move:
    side: Side
    attacker: int
    target: int

    def __str__(self) -> str:
        return f"{self.attacker}>{self.target}"

    def sort_key(self) -> tuple[str, int, int]:
        return (self.side.value, self.attacker, self.target)


@dataclass(frozen=True)
class Position:
    left: tuple[int, ...]
    right: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        _check_bound(self.n)
        for hands in (self.left, self.right):
            for v in hands:
                if not 1 <= v <= self.n:
                    raise ValueError(f"hand value {v} outside 1..{self.n}")
            if any(a > b for a, b in zip(hands, hands[1:])):
                raise ValueError("hand lists must be non-decreasing; use normalize()")

    def __str__(self) -> str:
        return render(self)

    def hands(self, side: Side) -> tuple[int, ...]:
        return self.left if side is Side.LEFT else self.right

    def to_json(self) -> dict:
        return {"left": list(self.left), "right": list(self.right), "n": self.n}

    @classmethod
    def from_json(cls, obj: dict) -> "Position":
        return normalize(obj["left"], obj["right"], obj["n"])


def _check_bound(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"finger count must be an int, got {type(n).__name__}")
    if not 1 <= n <= MAX_FINGERS:
        raise ValueError(f"finger count {n} outside 1..{MAX_FINGERS}")


def normalize(left: Iterable[int], right: Iterable[int], n: int) -> Position:
    """Build a position from hand values in any order."""
    _check_bound(n)
    lists = []
    for hands in (left, right):
        values = sorted(hands)
        for v in values:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"hand value {v!r} is not an int")
            if not 1 <= v <= n:
                raise ValueError(f"hand value {v} outside 1..{n}")
        lists.append(tuple(values))
    return Position(lists[0], lists[1], n)


_TOKEN = re.compile(r"\s*(\d+|[|@,^\-])")


def _tokens(text: str) -> list[tuple[str, int]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            skip = len(text[pos:]) - len(text[pos:].lstrip())
            bad = text[pos + skip]
            raise ParseError(f"unexpected token {bad!r} at column {pos + skip + 1}")
        out.append((m.group(1), m.start(1) + 1))
        pos = m.end()
    return out


def parse(text: str) -> Position:
    """Parse ``hands "|" hands "@" n`` where hands is ``-`` or ``v[^k],...``.

    >>> parse("1^3,2|1,2^2@5")
    Position(left=(1, 1, 1, 2), right=(1, 2, 2), n=5)
    """
    toks = _tokens(text)
    toks.append(("<end>", len(text) + 1))
    i = 0

    def peek() -> str:
        return toks[i][0]

    def fail() -> ParseError:
        tok, col = toks[i]
        return ParseError(f"unexpected token {tok!r} at column {col}")

    def uint() -> int:
        nonlocal i
        if not peek().isdigit():
            raise fail()
        i += 1
        return int(toks[i - 1][0])

    def hands() -> list[int]:
        nonlocal i
        if peek() == "-":
            i += 1
            return []
        values = []
        while True:
            v = uint()
            count = 1
            if peek() == "^":
                i += 1
                count = uint()
            values.extend([v] * count)
            if peek() != ",":
                return values
            i += 1

    left = hands()
    if peek() != "|":
        raise fail()
    i += 1
    right = hands()
    if peek() != "@":
        raise fail()
    i += 1
    n = uint()
    if peek() != "<end>":
        raise fail()
    if n < 1:
        raise ParseError(f"finger count {n} must be at least 1")
    try:
        return normalize(left, right, n)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _render_hands(hands: Sequence[int]) -> str:
    if not hands:
        return "-"
    parts = []
    i = 0
    while i < len(hands):
        j = i
        while j < len(hands) and hands[j] == hands[i]:
            j += 1
        run = j - i
        parts.append(str(hands[i]) if run == 1 else f"{hands[i]}^{run}")
        i = j
    return ",".join(parts)


def render(p: Position) -> str:
    return f"{_render_hands(p.left)}|{_render_hands(p.right)}@{p.n}"


def swap(p: Position) -> Position:
    return Position(p.right, p.left, p.n)


def is_terminal(p: Position) -> bool:
    return not p.left or not p.right


def rank(p: Position) -> Rank:
    hands = len(p.left) + len(p.right)
    return Rank(hands, p.n * hands - sum(p.left) - sum(p.right))


def _hit(hands: tuple[int, ...], target: int, amount: int, n: int) -> tuple[int, ...]:
    idx = hands.index(target)
    rest = list(hands[:idx] + hands[idx + 1:])
    if target + amount <= n:
        insort(rest, target + amount)
    return tuple(rest)


def apply_move(p: Position, move: Move) -> Position:
    """Play ``move`` from ``p``; raises ValueError if it is illegal."""
    mine, theirs = p.hands(move.side), p.hands(move.side.other)
    if move.attacker not in mine or move.target not in theirs:
        raise ValueError(f"illegal move {move} for {move.side} in {render(p)}")
    hit = _hit(theirs, move.target, move.attacker, p.n)
    if move.side is Side.LEFT:
        return Position(p.left, hit, p.n)
    return Position(hit, p.right, p.n)


def options(p: Position, side: Side) -> list[tuple[Move, Position]]:
    """All (move, result) pairs for ``side``, sorted by (attacker, target)."""
    mine, theirs = p.hands(side), p.hands(side.other)
    out = []
    for a in sorted(set(mine)):
        for t in sorted(set(theirs)):
            hit = _hit(theirs, t, a, p.n)
            q = Position(p.left, hit, p.n) if side is Side.LEFT else Position(hit, p.right, p.n)
            out.append((Move(side, a, t), q))
    return out


def predecessors(p: Position) -> list[tuple[Move, Position]]:
    """Every (move, parent) with ``apply_move(parent, move) == p``.

    Left-move parents come before Right-move parents; within a side,
    hand removals (smallest inserted value first) precede plain attacks.
    """
    out = []
    n = p.n
    for side in (Side.LEFT, Side.RIGHT):
        mine, theirs = p.hands(side), p.hands(side.other)
        attackers = sorted(set(mine))
        if not attackers:
            continue
        found = []
        # undo a removal: the target y vanished because y + a > n
        for y in range(max(1, n - attackers[-1] + 1), n + 1):
            a = next(a for a in attackers if y + a > n)
            parent_hands = tuple(sorted(theirs + (y,)))
            found.append((Move(side, a, y), parent_hands))
        # undo a plain attack: target t came from t - a
        for t in sorted(set(theirs)):
            for a in attackers:
                if t - a >= 1:
                    parent_hands = _replace(theirs, t, t - a)
                    found.append((Move(side, a, t - a), parent_hands))
        for move, parent_hands in found:
            if side is Side.LEFT:
                parent = Position(p.left, parent_hands, n)
            else:
                parent = Position(parent_hands, p.right, n)
            out.append((move, parent))
    return out


def _replace(hands: tuple[int, ...], old: int, new: int) -> tuple[int, ...]:
    idx = hands.index(old)
    return tuple(sorted(hands[:idx] + hands[idx + 1:] + (new,)))


def is_garden_of_eden(p: Position) -> tuple[bool, Optional[Position]]:
    """Return ``(True, None)`` if ``p`` has no predecessor, else ``(False, parent)``."""
    for _, parent in predecessors(p):
        return False, parent
    return True, None
