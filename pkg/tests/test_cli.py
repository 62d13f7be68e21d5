import csv
import io
import json

import pytest
from click.testing import CliRunner

from octopus.cli import cli
from octopus.position import parse, render


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args, input=None):
        return runner.invoke(cli, list(args), input=input)

    return invoke


class TestOutcome:
    def test_p_position(self, run):
        res = run("outcome", "1|1@2")
        assert res.exit_code == 0
        assert res.output.splitlines() == ["P"]

    def test_l_position_lists_moves(self, run):
        res = run("outcome", "1^3|1@2")
        assert res.output.splitlines()[0] == "L"
        assert "Left wins moving first with: 1>1" in res.output
        assert "Right" not in res.output

    def test_n_json(self, run):
        res = run("outcome", "1|1@3", "--format", "json")
        data = json.loads(res.output)
        assert data == {"position": "1|1@3", "outcome": "N",
                        "left_winning_moves": ["1>1"], "right_winning_moves": ["1>1"]}

    def test_parse_error(self, run):
        res = run("outcome", "1|1@x")
        assert res.exit_code == 2
        assert res.output.strip().count("\n") == 0
        assert "'x'" in res.output


class TestValue:
    @pytest.mark.parametrize("text,name", [("1|1@12", "+-J"), ("2|5@40", "{J|0}"), ("1|1@2", "0")])
    def test_names(self, run, text, name):
        res = run("value", text)
        assert res.exit_code == 0
        assert res.output.splitlines()[0] == name

    def test_json_has_literal(self, run):
        data = json.loads(run("value", "1|1@1", "--format", "json").output)
        assert data == {"position": "1|1@1", "value": "*", "canonical": "{0|0}", "outcome": "N"}


class TestTableScan:
    def test_table_one(self, run):
        data = json.loads(run("table", "--n", "1", "--format", "json").output)
        assert data == [["*"]]

    def test_table_csv(self, run):
        res = run("table", "--n", "20", "--format", "csv")
        rows = list(csv.reader(io.StringIO(res.output)))
        assert rows[0] == ["i\\j"] + [str(j) for j in range(1, 21)]
        assert len(rows) == 21 and all(len(r) == 21 for r in rows)
        assert rows[1][1:] == ["0", "v[2]", "*", "^[2]", "^", "0", "vv*", "v", "*"] + \
            [f"^[{k}]" for k in range(9, 1, -1)] + ["^", "0", "*"]

    def test_table_text(self, run):
        out = run("table", "--n", "3").output.splitlines()
        assert out[1].startswith("3 |") and out[3].startswith("1 |")

    def test_scan_json(self, run):
        data = json.loads(run("scan", "--max", "120", "--format", "json").output)
        assert data[-1] == {"from": 89, "to": 120, "value": "0", "outcome": "P"}
        assert [d["from"] for d in data] == [1, 2, 3, 5, 8, 12, 13, 21, 31, 34, 55, 80, 89]

    def test_scan_text(self, run):
        out = run("scan", "--max", "12").output.splitlines()
        assert out[-1].split() == ["12", "+-J", "N"]

    def test_deterministic_bytes(self, run, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run("table", "--n", "8", "--format", "csv", "--out", str(a))
        run("table", "--n", "8", "--format", "csv", "--out", str(b))
        assert a.read_bytes() == b.read_bytes() and a.read_bytes()


class TestVerify:
    @pytest.mark.parametrize(
        "args",
        [("fib", "--max-n", "120"), ("fc2", "--max-hands", "5"), ("fc3", "--max-a", "3"),
         ("deficit_lemma", "--max-hands", "4", "--max-n", "4"), ("hand_advantage", "--max-hands", "3", "--max-n", "3")],
    )
    def test_exit_zero(self, run, args):
        res = run("verify", *args)
        assert res.exit_code == 0, res.output
        assert "mismatches 0" in res.output

    def test_json_report(self, run):
        data = json.loads(run("verify", "fc3", "--max-a", "2", "--format", "json").output)
        assert data == {"oracle": "fc3", "checked": 2, "mismatches": []}

    def test_unknown_oracle(self, run):
        assert run("verify", "bogus", "--max-n", "3").exit_code == 2

    def test_missing_bound(self, run):
        assert run("verify", "fc2").exit_code == 2

    def test_mismatch_exit_one(self, run, monkeypatch):
        from octopus import theory

        monkeypatch.setattr(theory, "fib_outcome_11", lambda n: theory.Outcome.L)
        res = run("verify", "fib", "--max-n", "2")
        assert res.exit_code == 1
        assert "1|1@1: oracle L, solver N" in res.output


class TestPlay:
    def test_engine_wins_forced_line(self, run):
        res = run("play", "1|1@3", "--human", "right", input="2>1\n")
        lines = res.output.splitlines()
        assert "engine (Left) plays 1>1" in lines
        assert lines[-1] == "Right cannot move and loses; Left wins."
        for line in lines:
            if "to move]" in line:
                p = line.split("):")[-1].split()[0]
                assert render(parse(p)) == p

    def test_illegal_move_reprompts(self, run):
        res = run("play", "1|1@3", "--human", "right", input="1>1\n2>1\n")
        assert "illegal move; legal moves: 2>1" in res.output
        assert res.output.rstrip().endswith("Left wins.")

    @pytest.mark.parametrize("move", ["1>1"])
    def test_human_first_loses_p_position(self, run, move):
        res = run("play", "1|1@2", "--human", "left", input=move + "\n")
        assert res.output.rstrip().endswith("Left cannot move and loses; Right wins.")

    def test_terminal_start(self, run):
        res = run("play", "--human", "right", "--", "-|1@3")
        assert res.output.splitlines()[-1] == "Left cannot move and loses; Right wins."

    def test_eof_closes(self, run):
        res = run("play", "1,1|1,1@5", "--human", "left", input="")
        assert res.exit_code == 0 and "session closed." in res.output
