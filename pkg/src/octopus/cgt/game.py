"""Hash-consed short partizan games and their canonical forms.

Every :class:`Game` is interned: two games built from the same option sets
are the same object, so identity doubles as structural equality.  For
games flagged canonical, identity is also value equality.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional

_ids = itertools.count()
_interned: dict[tuple[tuple[int, ...], tuple[int, ...]], "Game"] = {}
_leq_memo: dict[tuple[int, int], bool] = {}
_add_memo: dict[tuple[int, int], "Game"] = {}
_neg_memo: dict[int, "Game"] = {}
_canon_memo: dict[int, "Game"] = {}


class Game:
    __slots__ = ("left", "right", "uid", "canonical", "__weakref__")

    left: tuple["Game", ...]
    right: tuple["Game", ...]
    uid: int
    canonical: bool

    def __new__(cls, left: Iterable["Game"] = (), right: Iterable["Game"] = ()) -> "Game":
        return make(left, right)

    def __repr__(self) -> str:
        return f"Game({literal(self)})"

    def __str__(self) -> str:
        return literal(self)

    def __le__(self, other: "Game") -> bool:
        return leq(self, other)

    def __ge__(self, other: "Game") -> bool:
        return leq(other, self)

    def __lt__(self, other: "Game") -> bool:
        return leq(self, other) and not leq(other, self)

    def __gt__(self, other: "Game") -> bool:
        return leq(other, self) and not leq(self, other)

    def __neg__(self) -> "Game":
        return neg(self)

    def __add__(self, other: "Game") -> "Game":
        return add(self, other)

    def __sub__(self, other: "Game") -> "Game":
        return add(self, neg(other))

    def equals(self, other: "Game") -> bool:
        """Value equality (works for non-canonical games too)."""
        return leq(self, other) and leq(other, self)

    # identity hashing is inherited from object; interning makes it structural


def make(left: Iterable[Game] = (), right: Iterable[Game] = (), canonical: bool = False) -> Game:
    """Intern the game ``{left | right}``; duplicate options collapse."""
    ls = tuple(sorted(set(left), key=_uid))
    rs = tuple(sorted(set(right), key=_uid))
    key = (tuple(g.uid for g in ls), tuple(g.uid for g in rs))
    g = _interned.get(key)
    if g is None:
        g = object.__new__(Game)
        g.left, g.right = ls, rs
        g.uid = next(_ids)
        g.canonical = canonical
        # setdefault is atomic, so concurrent builders agree on one node
        g = _interned.setdefault(key, g)
    if canonical and not g.canonical:
        g.canonical = True
    return g


def _uid(g: Game) -> int:
    return g.uid


ZERO = make(canonical=True)
STAR = make([ZERO], [ZERO], canonical=True)
UP = make([ZERO], [STAR], canonical=True)
DOWN = make([STAR], [ZERO], canonical=True)


def leq(g: Game, h: Game) -> bool:
    """``g <= h``: no Left option of g is >= h and no Right option of h is <= g."""
    if g is h:
        return True
    key = (g.uid, h.uid)
    hit = _leq_memo.get(key)
    if hit is not None:
        return hit
    result = not any(leq(h, gl) for gl in g.left) and not any(leq(hr, g) for hr in h.right)
    _leq_memo[key] = result
    return result


def eq(g: Game, h: Game) -> bool:
    return g is h or (leq(g, h) and leq(h, g))


def neg(g: Game) -> Game:
    hit = _neg_memo.get(g.uid)
    if hit is not None:
        return hit
    result = make([neg(x) for x in g.right], [neg(x) for x in g.left], canonical=g.canonical)
    _neg_memo[g.uid] = result
    _neg_memo[result.uid] = g
    return result


def _maximal(options: set[Game]) -> set[Game]:
    return {g for g in options if not any(h is not g and leq(g, h) for h in options)}


def _minimal(options: set[Game]) -> set[Game]:
    return {g for g in options if not any(h is not g and leq(h, g) for h in options)}


def canonical_from(left: Iterable[Game], right: Iterable[Game]) -> Game:
    """Canonical form of ``{left | right}`` when every option is already canonical."""
    ls, rs = set(left), set(right)
    while True:
        ls, rs = _maximal(ls), _minimal(rs)
        g = make(ls, rs)
        if g.canonical:
            return g
        changed = False
        new_ls: set[Game] = set()
        for gl in ls:
            reverser = next((x for x in gl.right if leq(x, g)), None)
            if reverser is None:
                new_ls.add(gl)
            else:
                new_ls.update(reverser.left)
                changed = True
        new_rs: set[Game] = set()
        for gr in rs:
            reverser = next((x for x in gr.left if leq(g, x)), None)
            if reverser is None:
                new_rs.add(gr)
            else:
                new_rs.update(reverser.right)
                changed = True
        if not changed:
            return make(ls, rs, canonical=True)
        ls, rs = new_ls, new_rs


def canonicalize(g: Game) -> Game:
    """Unique simplest game equal to ``g``."""
    if g.canonical:
        return g
    hit = _canon_memo.get(g.uid)
    if hit is not None:
        return hit
    result = canonical_from([canonicalize(x) for x in g.left], [canonicalize(x) for x in g.right])
    _canon_memo[g.uid] = result
    return result


def add(g: Game, h: Game) -> Game:
    """Disjunctive sum, returned in canonical form."""
    g, h = canonicalize(g), canonicalize(h)
    if g is ZERO:
        return h
    if h is ZERO:
        return g
    if g.uid > h.uid:
        g, h = h, g
    key = (g.uid, h.uid)
    hit = _add_memo.get(key)
    if hit is not None:
        return hit
    left = [add(x, h) for x in g.left] + [add(g, x) for x in h.left]
    right = [add(x, h) for x in g.right] + [add(g, x) for x in h.right]
    result = canonical_from(left, right)
    _add_memo[key] = result
    return result


def sum_of(games: Iterable[Game]) -> Game:
    total = ZERO
    for g in games:
        total = add(total, g)
    return total


def times(k: int, g: Game) -> Game:
    """``k`` copies of ``g`` (negative ``k`` adds copies of ``-g``)."""
    unit = g if k >= 0 else neg(g)
    return sum_of([unit] * abs(k))


def outcome_sign(g: Game) -> str:
    """One of ``"L"``, ``"R"``, ``"N"``, ``"P"`` from comparison with zero."""
    ge = leq(ZERO, g)
    le = leq(g, ZERO)
    if ge and le:
        return "P"
    if ge:
        return "L"
    if le:
        return "R"
    return "N"


def has_dominated_option(g: Game) -> bool:
    ls, rs = g.left, g.right
    if any(a is not b and leq(a, b) for a in ls for b in ls):
        return True
    return any(a is not b and leq(b, a) for a in rs for b in rs)


def has_reversible_option(g: Game) -> bool:
    if any(leq(x, g) for gl in g.left for x in gl.right):
        return True
    return any(leq(g, x) for gr in g.right for x in gr.left)


def is_canonical_form(g: Game) -> bool:
    """Direct check of the canonical-form conditions, recursively."""
    seen: set[int] = set()
    stack = [g]
    while stack:
        x = stack.pop()
        if x.uid in seen:
            continue
        seen.add(x.uid)
        if has_dominated_option(x) or has_reversible_option(x):
            return False
        stack.extend(x.left)
        stack.extend(x.right)
    return True


def literal(g: Game, _cache: Optional[dict[int, str]] = None) -> str:
    """Nested ``{a,b|c,d}`` rendering; the empty game is ``0``.

    Options are ordered by their rendered strings.
    """
    cache = {} if _cache is None else _cache
    hit = cache.get(g.uid)
    if hit is not None:
        return hit
    if not g.left and not g.right:
        text = "0"
    else:
        ls = sorted(literal(x, cache) for x in g.left)
        rs = sorted(literal(x, cache) for x in g.right)
        text = "{" + ",".join(ls) + "|" + ",".join(rs) + "}"
    cache[g.uid] = text
    return text


def depth(g: Game) -> int:
    memo: dict[int, int] = {}

    def go(x: Game) -> int:
        if x.uid not in memo:
            memo[x.uid] = 1 + max((go(y) for y in x.left + x.right), default=-1)
        return memo[x.uid]

    return go(g)


def cache_sizes() -> dict[str, int]:
    return {
        "interned": len(_interned),
        "leq": len(_leq_memo),
        "add": len(_add_memo),
        "neg": len(_neg_memo),
        "canonicalize": len(_canon_memo),
    }
