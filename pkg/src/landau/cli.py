"""Command-line front end.

Subcommands: validate, realize, trace, enumerate, compare.  Sequences are
given as a comma- or whitespace-separated literal argument, or one per line
via --file for batch runs.  Results go to stdout, diagnostics to stderr.
Exit codes: 0 success, 1 domain failure (invalid sequence, cap exceeded),
2 usage or parse error.
"""

from __future__ import annotations

import json
import sys
from typing import List, Tuple

import click

from . import oracle
from .sequences import (
    JumpTrace,
    LandauSequence,
    c_value,
    distance,
    down_trace,
    first_equality_index,
    gr_down_trace,
    regular_sequence,
    transitive_sequence,
    up_trace,
    validate_landau,
    validate_strong_landau,
)
from .tournaments import Tournament, realize as realize_tournament

TOURNAMENT_FORMATS = ("text", "json", "dot", "matrix", "arclist")


def _parse_literal(text: str) -> Tuple[int, ...]:
    parts = text.replace(",", " ").split()
    if not parts:
        click.echo(f"error: empty sequence literal {text!r}", err=True)
        sys.exit(2)
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        click.echo(f"error: cannot parse sequence literal {text!r}", err=True)
        sys.exit(2)


def _gather_literals(sequence, file_) -> List[str]:
    if (sequence is None) == (file_ is None):
        click.echo("error: give a sequence literal or --file, not both", err=True)
        sys.exit(2)
    if sequence is not None:
        return [sequence]
    with open(file_) as fh:
        literals = [line.strip() for line in fh if line.strip()]
    if not literals:
        click.echo(f"error: no sequences in {file_}", err=True)
        sys.exit(2)
    return literals


def _require_valid(raw: Tuple[int, ...]) -> LandauSequence:
    result = validate_landau(raw)
    if not isinstance(result, LandauSequence):
        click.echo(f"invalid sequence: {result.message}", err=True)
        sys.exit(1)
    return result


def _seq_str(scores) -> str:
    return ",".join(str(x) for x in scores)


@click.group()
def main():
    """Validate, realize, and trace tournament score sequences."""


@main.command()
@click.argument("sequence", required=False)
@click.option("--file", "file_", type=click.Path(exists=True, dir_okay=False))
@click.option("--strong", is_flag=True, help="Also require strict prefix sums.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def validate(sequence, file_, strong, fmt):
    """Check Landau's conditions (and strongness with --strong)."""
    failed = False
    for literal in _gather_literals(sequence, file_):
        raw = _parse_literal(literal)
        result = validate_landau(raw)
        valid = isinstance(result, LandauSequence)
        message = None
        if not valid:
            message = result.message
        elif strong and not validate_strong_landau(result):
            valid = False
            message = f"equality at k={first_equality_index(result)}"
        failed = failed or not valid
        if fmt == "json":
            click.echo(
                json.dumps(
                    {"sequence": list(raw), "valid": valid, "reason": message}
                )
            )
        elif valid:
            click.echo(f"{_seq_str(raw)}: valid")
        else:
            click.echo(f"{_seq_str(raw)}: invalid ({message})")
    sys.exit(1 if failed else 0)


def _render_arclist(t: Tournament) -> str:
    return "".join(f"{i} {j}\n" for i, j in t.arcs())


def _render_matrix(t: Tournament) -> str:
    return "".join(
        "".join("1" if t.beats(i, j) else "0" for j in range(t.n)) + "\n"
        for i in range(t.n)
    )


def _render_dot(t: Tournament) -> str:
    lines = ["digraph {"]
    lines.extend(f"  {i} -> {j};" for i, j in t.arcs())
    lines.append("}")
    return "\n".join(lines) + "\n"


def _render_tournament(t: Tournament, fmt: str) -> str:
    if fmt == "arclist":
        return _render_arclist(t)
    if fmt == "matrix":
        return _render_matrix(t)
    if fmt == "dot":
        return _render_dot(t)
    if fmt == "json":
        return (
            json.dumps(
                {
                    "n": t.n,
                    "scores": [int(x) for x in t.scores()],
                    "arcs": [[i, j] for i, j in t.arcs()],
                }
            )
            + "\n"
        )
    scores = _seq_str(int(x) for x in t.scores())
    return f"n={t.n}\nscores: {scores}\n" + _render_arclist(t)


@main.command()
@click.argument("sequence", required=False)
@click.option("--file", "file_", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(TOURNAMENT_FORMATS), default="text")
def realize(sequence, file_, fmt):
    """Construct a tournament realizing the given score sequence."""
    for literal in _gather_literals(sequence, file_):
        s = _require_valid(_parse_literal(literal))
        t = realize_tournament(s)
        click.echo(_render_tournament(t, fmt), nl=False)


def _render_trace_text(trace: JumpTrace) -> str:
    lines = [f"start: {trace.start}"]
    for i, step in enumerate(trace.steps, start=1):
        lines.append(f"step {i}: low={step.low} high={step.high} -> {step.after}")
    lines.append(f"end: {trace.end}")
    return "\n".join(lines) + "\n"


def _render_trace_json(trace: JumpTrace) -> str:
    return (
        json.dumps(
            {
                "start": list(trace.start.scores),
                "end": list(trace.end.scores),
                "steps": [
                    {"seq": list(step.after.scores), "low": step.low, "high": step.high}
                    for step in trace.steps
                ],
            }
        )
        + "\n"
    )


@main.command()
@click.argument("sequence", required=False)
@click.option("--file", "file_", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--algorithm",
    type=click.Choice(["down", "gr-down", "gr-up"]),
    default="down",
    help="down: jump to the regular sequence; gr-down: from the transitive "
    "sequence to the input; gr-up: jump to the transitive sequence.",
)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def trace(sequence, file_, algorithm, fmt):
    """Print the jump trace of one of the three algorithms."""
    for literal in _gather_literals(sequence, file_):
        s = _require_valid(_parse_literal(literal))
        if algorithm == "down":
            tr = down_trace(s)
        elif algorithm == "gr-down":
            tr = gr_down_trace(s)
        else:
            tr = up_trace(s)
        text = _render_trace_json(tr) if fmt == "json" else _render_trace_text(tr)
        click.echo(text, nl=False)


@main.command("enumerate")
@click.argument("n", type=int)
@click.option("--stats", "show_stats", is_flag=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def enumerate_sequences(n, show_stats, fmt):
    """List all valid score sequences of order N, in total-order order."""
    try:
        if show_stats:
            st = oracle.stats(n)
            if fmt == "json":
                click.echo(
                    json.dumps(
                        {
                            "n": st.n,
                            "sequence_count": st.sequence_count,
                            "realizable_count": st.realizable_count,
                            "max_trace_length": st.max_trace_length,
                            "max_c": st.max_c,
                        }
                    )
                )
            else:
                click.echo(f"n={st.n}")
                click.echo(f"sequence_count={st.sequence_count}")
                if st.realizable_count is not None:
                    click.echo(f"realizable_count={st.realizable_count}")
                click.echo(f"max_trace_length={st.max_trace_length}")
                click.echo(f"max_c={st.max_c}")
        else:
            seqs = oracle.enumerate_landau_sequences(n)
            if fmt == "json":
                click.echo(json.dumps([list(s.scores) for s in seqs]))
            else:
                for s in seqs:
                    click.echo(str(s))
    except (oracle.CapExceededError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


@main.command()
@click.argument("sequence", required=False)
@click.option("--file", "file_", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def compare(sequence, file_, fmt):
    """Jump counts of all three algorithms, with distances and 3-cycle count."""
    for literal in _gather_literals(sequence, file_):
        s = _require_valid(_parse_literal(literal))
        n = s.n
        down = len(down_trace(s))
        gr_down = len(gr_down_trace(s))
        gr_up = len(up_trace(s))
        d_regular = distance(s, regular_sequence(n))
        d_transitive = distance(s, transitive_sequence(n))
        c = c_value(s)
        if fmt == "json":
            click.echo(
                json.dumps(
                    {
                        "sequence": list(s.scores),
                        "down": down,
                        "gr_down": gr_down,
                        "gr_up": gr_up,
                        "d_regular": d_regular,
                        "d_transitive": d_transitive,
                        "c": c,
                    }
                )
            )
        else:
            click.echo(f"sequence: {s}")
            click.echo(f"down {down}")
            click.echo(f"gr-down {gr_down}")
            click.echo(f"gr-up {gr_up}")
            click.echo(f"d(R,S)={d_regular}")
            click.echo(f"d(Tr,S)={d_transitive}")
            click.echo(f"c(S)={c}")


if __name__ == "__main__":
    main()
