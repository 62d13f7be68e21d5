"""Command-line front end.

Usage:
    octopus outcome "1|1@3"
    octopus value "2|5@40" --format json
    octopus table --n 20 --format csv
    octopus scan --max 120
    octopus verify fc2 --max-hands 5
    octopus play "1|1@3" --human right
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from .cgt import literal, name_value, outcome_from_value, scan_11, to_game, value_table
from .play import play_session
from .position import ParseError, Position, Side, parse, render
from .solver import Solver
from .theory import ORACLES, Bounds, verify

EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _position(text: str) -> Position:
    try:
        return parse(text)
    except ParseError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True)


def format_option(*choices: str):
    return click.option("--format", "fmt", type=click.Choice(choices), default="text",
                        show_default=True, help="Output format.")


out_option = click.option("--out", type=click.Path(dir_okay=False), default=None,
                          help="Write output here instead of standard output.")


@click.group()
@click.version_option(package_name="artifact")
def cli() -> None:
    """Solve and evaluate Octopus (many-handed Chopsticks) positions.

    Positions are written like ``1^3,2|1,2^2@5``: Left's hands, ``|``,
    Right's hands, ``@``, finger count.  ``k^a`` repeats ``k`` a times and
    ``-`` is an empty hand list.
    """


@cli.command()
@click.argument("position")
@format_option("text", "json")
@out_option
def outcome(position: str, fmt: str, out: str | None) -> None:
    """Outcome class and every winning first move."""
    p = _position(position)
    report = Solver().solve(p)
    if fmt == "json":
        text = _json({
            "position": render(p),
            "outcome": str(report.outcome),
            "left_winning_moves": [str(m) for m in report.left_winning_moves],
            "right_winning_moves": [str(m) for m in report.right_winning_moves],
        })
    else:
        lines = [str(report.outcome)]
        for side, moves in ((Side.LEFT, report.left_winning_moves),
                            (Side.RIGHT, report.right_winning_moves)):
            if moves:
                lines.append(f"{side} wins moving first with: " + ", ".join(str(m) for m in moves))
        text = "\n".join(lines)
    _emit(text, out)


@cli.command()
@click.argument("position")
@format_option("text", "json")
@out_option
def value(position: str, fmt: str, out: str | None) -> None:
    """Named game value and canonical form."""
    p = _position(position)
    g = to_game(p)
    name = name_value(g).render()
    if fmt == "json":
        text = _json({"position": render(p), "value": name, "canonical": literal(g),
                      "outcome": str(outcome_from_value(g))})
    else:
        text = f"{name}\n{literal(g)}"
    _emit(text, out)


@cli.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Finger count.")
@format_option("text", "json", "csv")
@out_option
def table(n: int, fmt: str, out: str | None) -> None:
    """Values of every one-hand position <i|j>_n (Left holds i)."""
    grid = [[cell.render() for cell in row] for row in value_table(n)]
    if fmt == "json":
        text = _json(grid)
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["i\\j"] + list(range(1, n + 1)))
        for i, row in enumerate(grid, start=1):
            writer.writerow([i] + row)
        text = buf.getvalue()
    else:
        width = max(len(c) for row in grid for c in row)
        width = max(width, len(str(n)))
        label = len(str(n))
        lines = [f"values of <i|j>_{n}: row i = Left's hand, column j = Right's hand"]
        for i in range(n, 0, -1):
            lines.append(f"{i:>{label}} | " + " ".join(f"{c:>{width}}" for c in grid[i - 1]))
        lines.append(" " * label + "-+-" + "-" * ((width + 1) * n - 1))
        lines.append(" " * label + "   " + " ".join(f"{j:>{width}}" for j in range(1, n + 1)))
        text = "\n".join(lines)
    _emit(text, out)


@cli.command()
@click.option("--max", "n_max", type=click.IntRange(min=1), required=True,
              help="Largest finger count to scan.")
@format_option("text", "json")
@out_option
def scan(n_max: int, fmt: str, out: str | None) -> None:
    """Value and outcome of <1|1>_n for n up to --max, as intervals."""
    intervals = scan_11(n_max)
    if fmt == "json":
        text = _json([iv.to_json() for iv in intervals])
    else:
        rows = [("interval of n", "value", "outcome")]
        rows += [(iv.label(), iv.value, str(iv.outcome)) for iv in intervals]
        w0 = max(len(r[0]) for r in rows)
        w1 = max(len(r[1]) for r in rows)
        text = "\n".join(f"{a:<{w0}}  {b:<{w1}}  {c}" for a, b, c in rows)
    _emit(text, out)


@cli.command(name="verify")
@click.argument("oracle", type=click.Choice(ORACLES))
@click.option("--max-n", type=click.IntRange(min=1), default=None, help="Largest finger count.")
@click.option("--min-n", type=click.IntRange(min=1), default=1, show_default=True,
              help="Smallest finger count (hand_advantage, deficit_lemma, fib).")
@click.option("--max-hands", type=click.IntRange(min=1), default=None,
              help="Most hands per side.")
@click.option("--max-a", type=click.IntRange(min=1), default=None,
              help="Most hands per side for fc3.")
@format_option("text", "json")
@out_option
def verify_cmd(oracle: str, max_n, min_n, max_hands, max_a, fmt: str, out: str | None) -> None:
    """Exhaustively check a closed-form result against the solver.

    Exit status is 0 when nothing disagrees and 1 otherwise.
    """
    try:
        report = verify(oracle, Bounds(max_n=max_n, max_hands=max_hands, max_a=max_a, min_n=min_n),
                        Solver())
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    if fmt == "json":
        text = _json(report.to_json())
    else:
        lines = [f"{oracle}: checked {report.checked}, mismatches {len(report.mismatches)}"]
        lines += [f"  {render(m.position)}: oracle {m.oracle}, solver {m.solver}"
                  for m in report.mismatches]
        text = "\n".join(lines)
    _emit(text, out)
    sys.exit(0 if report.ok else EXIT_MISMATCH)


@cli.command()
@click.argument("position")
@click.option("--human", type=click.Choice(["left", "right"], case_sensitive=False),
              default="left", show_default=True, help="Side you play.")
@click.option("--first", type=click.Choice(["left", "right"], case_sensitive=False),
              default="left", show_default=True, help="Side that moves first.")
def play(position: str, human: str, first: str) -> None:
    """Play against the engine; enter moves as a>t."""
    p = _position(position)
    play_session(p, Side.from_name(human), Side.from_name(first), read=_read_line, write=click.echo)


def _read_line(prompt: str) -> str:
    click.echo(prompt, nl=False)
    line = sys.stdin.readline()
    if not line:
        click.echo()
        raise EOFError
    return line


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
