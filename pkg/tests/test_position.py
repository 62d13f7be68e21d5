import itertools

import pytest

from octopus.position import (
    Move,
    ParseError,
    Position,
    Rank,
    Side,
    apply_move,
    is_garden_of_eden,
    is_terminal,
    normalize,
    options,
    parse,
    rank,
    render,
    swap,
)


def P(left, right, n):
    return normalize(left, right, n)


def index_options(p, side):
    """Literal reading of the move rule: every (i, j) index pair, then normalize."""
    mine, theirs = list(p.hands(side)), list(p.hands(side.other))
    out = set()
    for i in range(len(mine)):
        for j in range(len(theirs)):
            hit = theirs[:]
            total = hit[j] + mine[i]
            if total > p.n:
                del hit[j]
            else:
                hit[j] = total
            q = P(mine, hit, p.n) if side is Side.LEFT else P(hit, mine, p.n)
            out.add((Move(side, mine[i], theirs[j]), q))
    return out


class TestNormalize:
    def test_sorts(self):
        assert P([2, 1], [1], 5) == Position((1, 2), (1,), 5)

    def test_already_sorted(self):
        assert P([1, 1], [1, 1], 2) == Position((1, 1), (1, 1), 2)

    def test_empty_list_allowed(self):
        p = P([], [3], 3)
        assert p.left == () and is_terminal(p)

    @pytest.mark.parametrize("left,right,n", [([0], [1], 3), ([1], [4], 3), ([1], [1], 0), ([-1], [], 2)])
    def test_rejects_out_of_range(self, left, right, n):
        with pytest.raises(ValueError):
            P(left, right, n)

    def test_rejects_unsorted_direct_construction(self):
        with pytest.raises(ValueError):
            Position((2, 1), (), 3)

    def test_idempotent(self):
        p = P([3, 1, 2, 1], [5, 4], 5)
        assert P(p.left, p.right, p.n) == p


class TestParse:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("1^3,2|1,2^2@5", Position((1, 1, 1, 2), (1, 2, 2), 5)),
            ("1|1@20", Position((1,), (1,), 20)),
            ("-|3@3", Position((), (3,), 3)),
            (" 2 , 1 | - @ 4 ", Position((1, 2), (), 4)),
            ("-|-@2", Position((), (), 2)),
        ],
    )
    def test_examples(self, text, expected):
        assert parse(text) == expected

    @pytest.mark.parametrize(
        "text,token",
        [("1|x@2", "'x'"), ("1|1", "'<end>'"), ("1,|1@2", "'|'"), ("1|1@2@3", "'@'"), ("1^|1@2", "'|'")],
    )
    def test_syntax_errors_name_token(self, text, token):
        with pytest.raises(ParseError, match=token):
            parse(text)

    def test_bound_violation(self):
        with pytest.raises(ParseError):
            parse("3|1@2")
        with pytest.raises(ParseError):
            parse("1|1@0")

    @pytest.mark.parametrize("text", ["1^3,2|1,2^2@5", "-|3@3", "1|1@20", "-|-@7", "2^4|1,3@3"])
    def test_canonical_round_trip(self, text):
        assert render(parse(text)) == text

    def test_json_form(self):
        p = parse("1^2|3@4")
        assert p.to_json() == {"left": [1, 1], "right": [3], "n": 4}
        assert Position.from_json(p.to_json()) == p


class TestOptions:
    def test_single_hand(self):
        assert options(P([1], [1], 3), Side.LEFT) == [(Move(Side.LEFT, 1, 1), P([1], [2], 3))]

    def test_removal(self):
        assert options(P([2], [2], 2), Side.LEFT) == [(Move(Side.LEFT, 2, 2), P([2], [], 2))]

    def test_value_identified_moves(self):
        p = P([1, 2], [1, 1], 2)
        expected = {(Move(Side.LEFT, 1, 1), P([1, 2], [1, 2], 2)), (Move(Side.LEFT, 2, 1), P([1, 2], [1], 2))}
        assert index_options(p, Side.LEFT) == expected
        assert set(options(p, Side.LEFT)) == expected

    def test_sorted_by_attacker_then_target(self):
        moves = [m for m, _ in options(P([3, 1, 2], [2, 1], 5), Side.RIGHT)]
        assert [(m.attacker, m.target) for m in moves] == sorted((m.attacker, m.target) for m in moves)

    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    def test_matches_index_enumeration(self, n):
        for l, r in itertools.product(range(3), repeat=2):
            for left in itertools.combinations_with_replacement(range(1, n + 1), l):
                for right in itertools.combinations_with_replacement(range(1, n + 1), r):
                    p = Position(left, right, n)
                    for side in Side:
                        assert set(options(p, side)) == index_options(p, side)

    def test_no_options_when_a_side_is_empty(self):
        assert options(P([], [1, 2], 5), Side.RIGHT) == []
        assert options(P([], [1, 2], 5), Side.LEFT) == []

    def test_apply_move_rejects_illegal(self):
        with pytest.raises(ValueError):
            apply_move(P([1], [1], 3), Move(Side.LEFT, 2, 1))


class TestRankSwapTerminal:
    def test_rank(self):
        assert rank(P([1], [1], 3)) == Rank(2, 4)
        assert rank(P([1], [2], 3)) == Rank(2, 3)
        assert rank(P([2], [2], 2)) == Rank(2, 0)
        assert rank(P([2], [], 2)) == Rank(1, 0)
        assert rank(P([], [], 2)) == Rank(0, 0)

    def test_swap(self):
        assert swap(P([1, 2], [1], 2)) == P([1], [1, 2], 2)
        assert swap(P([1], [1], 9)) == P([1], [1], 9)

    @pytest.mark.parametrize("text,expected", [("-|3@3", True), ("1|1@2", False), ("-|-@5", True)])
    def test_is_terminal(self, text, expected):
        assert is_terminal(parse(text)) is expected


def brute_force_parents(p, max_extra=1):
    """All positions (up to one more hand than p per side) having p as an option."""
    n = p.n
    found = set()
    for l in range(len(p.left), len(p.left) + max_extra + 1):
        for r in range(len(p.right), len(p.right) + max_extra + 1):
            for left in itertools.combinations_with_replacement(range(1, n + 1), l):
                for right in itertools.combinations_with_replacement(range(1, n + 1), r):
                    q = Position(left, right, n)
                    for side in Side:
                        if any(child == p for _, child in options(q, side)):
                            found.add(q)
    return found


class TestGardenOfEden:
    def test_doubly_empty(self):
        assert is_garden_of_eden(P([], [], 2)) == (True, None)

    @pytest.mark.parametrize("n", [1, 2, 3, 7])
    def test_one_one_has_parent(self, n):
        eden, witness = is_garden_of_eden(P([1], [1], n))
        assert not eden
        assert witness == P([1], [1, n], n)
        assert witness in brute_force_parents(P([1], [1], n))

    def test_two_by_two(self):
        p = P([1, 1], [1, 1], 2)
        eden, witness = is_garden_of_eden(p)
        assert not eden and witness == P([1, 1], [1, 1, 2], 2)
        assert witness in brute_force_parents(p)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_agrees_with_brute_force(self, n):
        # a move changes exactly one hand count by at most one, so one extra hand suffices
        for l, r in itertools.product(range(3), repeat=2):
            for left in itertools.combinations_with_replacement(range(1, n + 1), l):
                for right in itertools.combinations_with_replacement(range(1, n + 1), r):
                    p = Position(left, right, n)
                    eden, witness = is_garden_of_eden(p)
                    parents = brute_force_parents(p)
                    assert eden == (not parents), render(p)
                    if witness is not None:
                        assert witness in parents
