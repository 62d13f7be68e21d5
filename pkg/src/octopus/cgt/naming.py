"""Symbolic names for canonical games."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .game import STAR, ZERO, Game, canonical_from, leq, literal, neg
from .uptimal import find_uptimal, make_uptimal, trim, up_partial_sum


class Kind(enum.Enum):
    ZERO = "zero"
    STAR = "star"
    UPTIMAL = "uptimal"
    SWITCH = "switch"
    NAMED = "named"
    OPAQUE = "opaque"


@dataclass(frozen=True)
class ValueName:
    kind: Kind
    coeffs: tuple[int, ...] = ()
    star: bool = False
    parts: tuple["ValueName", ...] = ()
    label: str = ""
    literal: str = ""

    @classmethod
    def uptimal(cls, coeffs, star: bool = False) -> "ValueName":
        coeffs = trim(coeffs)
        if not any(coeffs):
            return cls(Kind.STAR) if star else cls(Kind.ZERO)
        return cls(Kind.UPTIMAL, coeffs=coeffs, star=star)

    def render(self) -> str:
        if self.kind is Kind.ZERO:
            return "0"
        if self.kind is Kind.STAR:
            return "*"
        if self.kind is Kind.NAMED:
            return self.label
        if self.kind is Kind.OPAQUE:
            return self.literal
        if self.kind is Kind.SWITCH:
            return "{" + self.parts[0].render() + "|" + self.parts[1].render() + "}"
        return _render_uptimal(self.coeffs, self.star)

    def __str__(self) -> str:
        return self.render()


def _render_uptimal(coeffs: tuple[int, ...], star: bool) -> str:
    s = "*" if star else ""
    k = len(coeffs)
    if all(d == 1 for d in coeffs) and not star:
        return "^" if k == 1 else f"^[{k}]"
    if all(d == -1 for d in coeffs) and not star:
        return "v" if k == 1 else f"v[{k}]"
    if k == 1 and coeffs[0] > 0:
        return "^" * coeffs[0] + s
    if k == 1:
        return "v" * -coeffs[0] + s
    digits = "".join(str(d) if 0 <= d <= 9 else f"({d})" for d in coeffs)
    return "." + digits + s


@lru_cache(maxsize=None)
def j_value() -> Game:
    """``J = {0 | ↑^[2]}``."""
    return canonical_from([ZERO], [up_partial_sum(2)])


@lru_cache(maxsize=None)
def reference_names() -> dict[int, ValueName]:
    """Canonical reference forms keyed by game identity, first entry wins."""
    table: dict[int, ValueName] = {}

    def put(g: Game, name: ValueName) -> None:
        table.setdefault(g.uid, name)

    for k in range(1, 10):
        put(make_uptimal((1,) * k), ValueName.uptimal((1,) * k))
        put(make_uptimal((-1,) * k), ValueName.uptimal((-1,) * k))
    for coeffs in ((1,), (-1,), (2,), (-2,)):
        put(make_uptimal(coeffs, True), ValueName.uptimal(coeffs, True))
    j = j_value()
    put(j, ValueName(Kind.NAMED, label="{0|^[2]}"))
    put(neg(j), ValueName(Kind.NAMED, label="{v[2]|0}"))
    put(canonical_from([j], [neg(j)]), ValueName(Kind.NAMED, label="+-J"))
    j_over_zero = canonical_from([j], [ZERO])
    put(j_over_zero, ValueName(Kind.NAMED, label="{J|0}"))
    put(neg(j_over_zero), ValueName(Kind.NAMED, label="{0|-J}"))
    return table


class NotCanonicalError(ValueError):
    pass


def name_value(g: Game, search: bool = True) -> ValueName:
    """Name a canonical game.

    Tries, in order: 0 and * by identity, the reference dictionary, the
    bounded uptimal search, a two-option switch ``{a|b}`` with ``a > b``,
    and finally the literal canonical form.
    """
    if not g.canonical:
        raise NotCanonicalError(f"{literal(g)} is not in canonical form")
    if g is ZERO:
        return ValueName(Kind.ZERO)
    if g is STAR:
        return ValueName(Kind.STAR)
    hit = reference_names().get(g.uid)
    if hit is not None:
        return hit
    if search:
        found = find_uptimal(g)
        if found is not None:
            return ValueName.uptimal(*found)
    if len(g.left) == 1 and len(g.right) == 1:
        a, b = g.left[0], g.right[0]
        if leq(b, a) and not leq(a, b):
            return ValueName(Kind.SWITCH, parts=(name_value(a, search), name_value(b, search)))
    return ValueName(Kind.OPAQUE, literal=literal(g))


def is_uptimal(g: Game) -> bool:
    return find_uptimal(g) is not None
