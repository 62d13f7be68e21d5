"""Octopus, the many-handed Chopsticks: outcome solver, closed-form results,
and canonical-form game values."""

from .position import (
    Move,
    ParseError,
    Position,
    Rank,
    Side,
    is_garden_of_eden,
    is_terminal,
    normalize,
    options,
    parse,
    rank,
    render,
    swap,
)
from .solver import Outcome, SolveReport, Solver, outcome, solve, win_first, winning_moves

__version__ = "0.1.0"
