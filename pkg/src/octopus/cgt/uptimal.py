"""Up-nth games, uptimal sums, and the search that recognises uptimals."""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence

from .game import STAR, UP, ZERO, Game, add, canonical_from, canonicalize, leq, neg, sum_of, times

MAX_DIGITS = 10
MAX_COEFF = 10


@lru_cache(maxsize=None)
def make_up_nth(i: int) -> Game:
    """``↑¹ = {0|*}`` and ``↑ⁱ = {0 | ↓_[i-1] *}`` for ``i >= 2``."""
    if i < 1:
        raise ValueError("up-nth index starts at 1")
    if i == 1:
        return UP
    return canonical_from([ZERO], [add(neg(up_partial_sum(i - 1)), STAR)])


@lru_cache(maxsize=None)
def up_partial_sum(k: int) -> Game:
    """``↑^[k] = ↑¹ + ↑² + ... + ↑ᵏ``; ``k = 0`` gives 0."""
    if k < 0:
        raise ValueError("partial sum index must be nonnegative")
    if k == 0:
        return ZERO
    return add(up_partial_sum(k - 1), make_up_nth(k))


def make_uptimal(coeffs: Sequence[int], star: bool = False) -> Game:
    """``Σ dᵢ·↑ⁱ`` plus ``*`` when ``star``, in canonical form."""
    parts = [times(d, make_up_nth(i)) for i, d in enumerate(coeffs, start=1) if d]
    if star:
        parts.append(STAR)
    return sum_of(parts)


def trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def find_uptimal(
    g: Game, max_digits: int = MAX_DIGITS, max_coeff: int = MAX_COEFF
) -> Optional[tuple[tuple[int, ...], bool]]:
    """Return ``(coeffs, star)`` with ``make_uptimal(coeffs, star) == g``, or None.

    Digits are fixed left to right.  Any tail ``Σ_{k>i} dₖ·↑ᵏ`` with
    ``|dₖ| <= max_coeff`` lies strictly inside ``±(max_coeff+1)·↑^(i+1)``, so
    at place ``i`` the only admissible digit is the one that brings the
    remainder inside that window.  A hit is confirmed by canonical identity.
    """
    g = canonicalize(g)
    for star in (False, True):
        residual = add(g, STAR) if star else g
        digits: list[int] = []
        for place in range(1, max_digits + 1):
            if residual is ZERO:
                break
            d, residual = _digit(residual, place, max_coeff)
            if d is None:
                break
            digits.append(d)
        if residual is ZERO:
            coeffs = trim(digits)
            if make_uptimal(coeffs, star) is g:
                return coeffs, star
    return None


@lru_cache(maxsize=None)
def _window(place: int, max_coeff: int) -> Game:
    return times(max_coeff + 1, make_up_nth(place + 1))


def _digit(residual: Game, place: int, max_coeff: int) -> tuple[Optional[int], Game]:
    unit = make_up_nth(place)
    hi = _window(place, max_coeff)
    lo = neg(hi)

    def inside(x: Game) -> bool:
        return leq(lo, x) and not leq(x, lo) and leq(x, hi) and not leq(hi, x)

    d, rest = 0, residual
    if leq(hi, rest):
        step, sign = neg(unit), 1
    elif leq(rest, lo):
        step, sign = unit, -1
    else:
        return (0, rest) if inside(rest) else (None, rest)
    while abs(d) < max_coeff:
        d, rest = d + sign, add(rest, step)
        if inside(rest):
            return d, rest
        if sign > 0 and not leq(hi, rest) or sign < 0 and not leq(rest, lo):
            break
    return None, rest
