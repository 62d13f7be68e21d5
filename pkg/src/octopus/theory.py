"""Closed-form outcome results, and sweeps that confront them with the solver."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Optional

from .position import Position, Side, apply_move, normalize, render
from .solver import Outcome, Solver, default_solver

# Largest Fibonacci pair fitting in an unsigned 64-bit word.
_FIB_LIMIT = 2**64


class FibWindow(NamedTuple):
    index: int
    lo: int
    hi: int


class HandProfile2(NamedTuple):
    """Counts of 1- and 2-finger hands for Left (a, b) and Right (c, d)."""

    a: int
    b: int
    c: int
    d: int

    def position(self) -> Position:
        return normalize([1] * self.a + [2] * self.b, [1] * self.c + [2] * self.d, 2)

    @classmethod
    def of(cls, p: Position) -> "HandProfile2":
        if p.n != 2:
            raise ValueError("hand profiles describe finger count 2 only")
        return cls(p.left.count(1), p.left.count(2), p.right.count(1), p.right.count(2))


def fib_window(n: int) -> tuple[int, int, int]:
    """Return ``(k, f_k, f_{k+1})`` with ``f_k <= n < f_{k+1}`` and ``k >= 2``."""
    if n < 1:
        raise ValueError("finger count must be positive")
    k, lo, hi = 2, 1, 2
    while hi <= n:
        k, lo, hi = k + 1, hi, lo + hi
        if hi >= _FIB_LIMIT:
            raise OverflowError(f"n={n} exceeds the 64-bit Fibonacci range")
    return k, lo, hi


def fib_outcome_11(n: int) -> Outcome:
    """Outcome of one hand each holding one finger, from the Fibonacci windows.

    N exactly when ``f_{2i} <= n < f_{2i+1}`` for some ``i``.
    """
    k, _, _ = fib_window(n)
    return Outcome.N if k % 2 == 0 else Outcome.P


def fib_windows(n_max: int) -> list[FibWindow]:
    """The N-windows ``[f_{2i}, f_{2i+1})`` starting at or below ``n_max``."""
    out = []
    i, lo, hi = 1, 1, 2
    while lo <= n_max:
        out.append(FibWindow(i, lo, hi))
        i, lo, hi = i + 1, lo + hi, lo + 2 * hi
    return out


def first_mover_hand_advantage(p: Position, side: Side) -> Optional[bool]:
    """True when ``side`` has strictly more hands and the opponent still has one.

    With no opposing hands nobody can move, so no claim is made.
    """
    mine, theirs = len(p.hands(side)), len(p.hands(side.other))
    if theirs >= 1 and mine > theirs:
        return True
    return None


def two_more_hands_outcome(p: Position) -> Optional[Outcome]:
    l, r = len(p.left), len(p.right)
    if min(l, r) == 0:
        return None
    if l >= r + 2:
        return Outcome.L
    if r >= l + 2:
        return Outcome.R
    return None


def fc2_outcome(h: HandProfile2) -> Outcome:
    """Outcome of ``<1^a,2^b | 1^c,2^d>`` with finger count 2."""
    a, b, c, d = h
    if min(a, b, c, d) < 0:
        raise ValueError("hand counts must be nonnegative")
    lh, rh = a + b, c + d
    if lh == 0 or rh == 0:
        # one side is handless: nobody can move
        return Outcome.P
    if lh >= rh + 2:
        return Outcome.L
    if rh >= lh + 2:
        return Outcome.R
    if lh == rh:
        if b == d == 0 and a % 2 and c % 2:
            return Outcome.P
        if b == 0 and d != 0 and c % 2:
            return Outcome.L
        if d == 0 and b != 0 and a % 2:
            return Outcome.R
        return Outcome.N
    if lh == rh + 1:
        if d == 0 and b > 0 and a % 2:
            return Outcome.N
        return Outcome.L
    if b == 0 and d > 0 and c % 2:
        return Outcome.N
    return Outcome.R


def fc3_initial_outcome(a: int) -> Outcome:
    if a < 1:
        raise ValueError("need at least one hand per side")
    return Outcome.N


def lemma_deficit_check(p: Position, solver: Optional[Solver] = None) -> bool:
    """Check that a first-moving Left with fewer hands wins only by
    being one hand short and removing a Right hand with every winning move.
    """
    solver = solver or default_solver()
    l, r = len(p.left), len(p.right)
    if l >= r:
        raise ValueError(f"{render(p)}: Left must have fewer hands than Right")
    if not solver.win_first(p, Side.LEFT):
        return True
    if l != r - 1:
        return False
    return all(len(apply_move(p, m).right) < r for m in solver.winning_moves(p, Side.LEFT))


@dataclass
class Mismatch:
    position: Position
    oracle: str
    solver: str

    def to_json(self) -> dict:
        return {"position": render(self.position), "oracle": self.oracle, "solver": self.solver}


@dataclass
class VerifyReport:
    oracle: str
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "oracle": self.oracle,
            "checked": self.checked,
            "mismatches": [m.to_json() for m in self.mismatches],
        }


@dataclass(frozen=True)
class Bounds:
    max_n: Optional[int] = None
    max_hands: Optional[int] = None
    max_a: Optional[int] = None
    min_n: int = 1


ORACLES = ("fib", "fc2", "fc3", "hand_advantage", "deficit_lemma")


def multisets(n: int, size: int) -> Iterator[tuple[int, ...]]:
    return itertools.combinations_with_replacement(range(1, n + 1), size)


def positions_in_bounds(max_hands: int, n: int) -> Iterator[Position]:
    """Positions with 0..max_hands hands per side, ordered by (l, r, hand values)."""
    for l in range(max_hands + 1):
        for r in range(max_hands + 1):
            for left in multisets(n, l):
                for right in multisets(n, r):
                    yield Position(left, right, n)


def _require(value: Optional[int], name: str, oracle: str) -> int:
    if value is None or value < 1:
        raise ValueError(f"oracle {oracle!r} needs a positive {name} bound")
    return value


def verify(oracle: str, bounds: Bounds, solver: Optional[Solver] = None) -> VerifyReport:
    """Exhaustively compare an oracle with the solver inside ``bounds``."""
    if oracle not in ORACLES:
        raise ValueError(f"unknown oracle {oracle!r}; choose from {', '.join(ORACLES)}")
    solver = solver or default_solver()
    report = VerifyReport(oracle)

    def check(p: Position, expected: str, actual: str) -> None:
        report.checked += 1
        if expected != actual:
            report.mismatches.append(Mismatch(p, expected, actual))

    if oracle == "fib":
        for n in range(bounds.min_n, _require(bounds.max_n, "max_n", oracle) + 1):
            p = Position((1,), (1,), n)
            check(p, str(fib_outcome_11(n)), str(solver.outcome(p)))
    elif oracle == "fc2":
        k = _require(bounds.max_hands, "max_hands", oracle)
        for lh in range(k + 1):
            for rh in range(k + 1):
                for a in range(lh + 1):
                    for c in range(rh + 1):
                        h = HandProfile2(a, lh - a, c, rh - c)
                        p = h.position()
                        check(p, str(fc2_outcome(h)), str(solver.outcome(p)))
    elif oracle == "fc3":
        for a in range(1, _require(bounds.max_a, "max_a", oracle) + 1):
            p = Position((1,) * a, (1,) * a, 3)
            check(p, str(fc3_initial_outcome(a)), str(solver.outcome(p)))
    else:
        k = _require(bounds.max_hands, "max_hands", oracle)
        for n in range(bounds.min_n, _require(bounds.max_n, "max_n", oracle) + 1):
            for p in positions_in_bounds(k, n):
                l, r = len(p.left), len(p.right)
                if oracle == "hand_advantage":
                    if r >= 1 and l > r:
                        check(p, "win", "win" if solver.win_first(p, Side.LEFT) else "loss")
                elif l >= 1 and l < r:
                    check(p, "holds", "holds" if lemma_deficit_check(p, solver) else "violated")
    report.mismatches.sort(key=lambda m: (m.position.n, len(m.position.left),
                                          len(m.position.right), m.position.left, m.position.right))
    return report
