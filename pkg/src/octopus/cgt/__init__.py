"""Canonical-form values of Octopus positions."""

from .build import outcome_from_value, to_game
from .game import (
    DOWN,
    STAR,
    UP,
    ZERO,
    Game,
    add,
    canonicalize,
    eq,
    is_canonical_form,
    leq,
    literal,
    make,
    neg,
)
from .naming import Kind, ValueName, is_uptimal, j_value, name_value
from .tables import Interval, scan_11, value_table
from .uptimal import find_uptimal, make_up_nth, make_uptimal, up_partial_sum
