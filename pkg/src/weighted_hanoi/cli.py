"""Command-line surface tying the models, solvers, closed forms, and the
brute-force oracle together.

Exit codes: 0 success, 1 verification mismatch, 2 malformed model or
arguments, 3 unsolvable configuration, 4 resource cap exceeded.  Results go
to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from pathlib import Path

import click

from .cost import WeightTable, idle_peg
from .engine import (
    BranchChoice,
    BranchTrace,
    State,
    detect_phase,
    dp_solve,
    plan_cost,
    reconstruct_plan,
)
from .errors import (
    OracleCapError,
    PlanSizeError,
    UnboundedCountError,
    UnsolvableError,
    WeightedHanoiError,
)
from .models import (
    Model,
    closed_form_vector,
    lower,
    model_from_json,
    model_to_json,
    seq_transform,
    seqspec_from_json,
)
from .oracle import (
    ORACLE_CAP_DEFAULT,
    count_shortest_paths,
    export_edges,
    oracle_cost_vector,
)
from .sequences import seq_eval
from . import __version__

DEFAULT_MAX_N = 64
DEFAULT_PLAN_CAP = 2**20

EXIT_MISMATCH = 1
EXIT_BAD_SPEC = 2
EXIT_UNSOLVABLE = 3
EXIT_CAP = 4


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _cap(flag_value: int | None, env_name: str, default: int) -> int:
    value = flag_value
    if value is None:
        env = os.environ.get(env_name)
        if env is not None:
            try:
                value = int(env)
            except ValueError:
                _fail(EXIT_BAD_SPEC, f"{env_name} must be an integer, got {env!r}")
    if value is None:
        return default
    if value > default:
        click.echo(
            f"warning: raising cap to {value} (default {default}); "
            "memory and time grow accordingly",
            err=True,
        )
    return value


def _load_model(text: str) -> Model:
    """Parse a model from inline JSON or from a file path."""
    candidate = text.strip()
    if not candidate.startswith("{"):
        path = Path(candidate)
        if not path.is_file():
            _fail(EXIT_BAD_SPEC, f"model spec file not found: {candidate}")
        candidate = path.read_text()
    try:
        data = json.loads(candidate)
    except json.JSONDecodeError as exc:
        _fail(EXIT_BAD_SPEC, f"model spec is not valid JSON: {exc}")
    try:
        return model_from_json(data)
    except (ValueError, TypeError) as exc:
        _fail(EXIT_BAD_SPEC, f"bad model spec: {exc}")
    raise AssertionError("unreachable")


def _json_dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _csv_echo(rows: list[list]) -> None:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    click.echo(buf.getvalue(), nl=False)


_FORMAT = click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "csv", "json"]),
    default="text",
    show_default=True,
    help="Output format.",
)


@click.group()
@click.version_option(version=__version__)
def main() -> None:
    """Exact solvers for the weighted three-peg Tower of Hanoi."""


@main.command()
@click.option("--model", "model_text", required=True, help="Model JSON (inline or file path).")
@click.option("-n", "n", type=int, required=True, help="Number of discs.")
@_FORMAT
@click.option("--max-n", type=int, default=None, help=f"Level cap (default {DEFAULT_MAX_N}; env HANOI_MAX_N).")
def solve(model_text: str, n: int, fmt: str, max_n: int | None) -> None:
    """Print the cost table d_0..d_n with the winning branch per level.

    Row n carries the branch decisions that produced it (level n-1); the
    first row has none.
    """
    model = _load_model(model_text)
    cap = _cap(max_n, "HANOI_MAX_N", DEFAULT_MAX_N)
    if n < 0 or n > cap:
        _fail(EXIT_CAP, f"n must lie in 0..{cap} (HANOI_MAX_N raises the cap)")
    try:
        vectors, trace = dp_solve(lower(model), n)
    except UnsolvableError as exc:
        _fail(EXIT_UNSOLVABLE, str(exc))
    rows = []
    for level, vec in enumerate(vectors):
        branch = ["", "", ""]
        if level > 0:
            branch = [trace.choice(level - 1, k).value for k in (0, 1, 2)]
        rows.append([level, *(str(c) for c in vec.as_tuple()), *branch])
    if fmt == "json":
        payload = {
            "model": model_to_json(model),
            "n": n,
            "rows": [
                {"n": r[0], "d": r[1:4], "branch": r[4:7] if r[0] else None}
                for r in rows
            ],
        }
        click.echo(_json_dump(payload))
    elif fmt == "csv":
        _csv_echo([["n", "d0", "d1", "d2", "branch0", "branch1", "branch2"], *rows])
    else:
        widths = [max(len(str(r[i])) for r in rows) for i in range(7)]
        header = ["n", "d0", "d1", "d2", "branch0", "branch1", "branch2"]
        widths = [max(w, len(h)) for w, h in zip(widths, header)]
        click.echo("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for r in rows:
            click.echo("  ".join(str(x).ljust(w) for x, w in zip(r, widths)))


@main.command()
@click.option("--model", "model_text", required=True, help="Model JSON (inline or file path).")
@click.option("--nmax", type=int, required=True, help="Verify levels 0..nmax.")
@click.option("--oracle-cap", type=int, default=None, help=f"Oracle disc cap (default {ORACLE_CAP_DEFAULT}; env HANOI_ORACLE_CAP).")
def verify(model_text: str, nmax: int, oracle_cap: int | None) -> None:
    """Check solver, oracle, and closed form against each other per level."""
    model = _load_model(model_text)
    cap = _cap(oracle_cap, "HANOI_ORACLE_CAP", ORACLE_CAP_DEFAULT)
    if nmax < 0 or nmax > cap:
        _fail(EXIT_CAP, f"nmax must lie in 0..{cap} (HANOI_ORACLE_CAP raises the cap)")
    table = lower(model)
    try:
        vectors, trace = dp_solve(table, nmax)
    except UnsolvableError as exc:
        _fail(EXIT_UNSOLVABLE, str(exc))
    mismatches = 0
    threshold = None
    for n in range(nmax + 1):
        dp_vec = vectors[n]
        oracle_vec = oracle_cost_vector(table, n, max_discs=cap)
        parts = []
        ok = dp_vec == oracle_vec
        parts.append("dp==oracle" if ok else f"dp={dp_vec} oracle={oracle_vec}")
        closed = closed_form_vector(model, n)
        if closed is not None:
            threshold = closed.threshold if closed.threshold is not None else threshold
            applicable = True
            if closed.conditional:
                applicable = BranchTrace(trace.rows[:n]).all_one_ldm()
            if applicable:
                if closed.vector == dp_vec:
                    parts.append("closed agrees")
                else:
                    ok = False
                    parts.append(f"closed={closed.vector} DISAGREES")
            else:
                parts.append("closed form not applicable at this level")
        if not ok:
            mismatches += 1
        click.echo(f"n={n} d={dp_vec} {'; '.join(parts)}")
    if mismatches:
        click.echo(f"MISMATCH on {mismatches} level(s)")
        sys.exit(EXIT_MISMATCH)
    summary = "all agree"
    if threshold is not None:
        summary += f"; m={threshold}"
    click.echo(summary)


@main.command()
@click.option("--w", "w_text", required=True, help="Middle-move weight (exact rational).")
@click.option("--nmax", type=int, required=True, help="Inspect levels 0..nmax-1.")
@_FORMAT
def phase(w_text: str, nmax: int, fmt: str) -> None:
    """Locate strategy switches for side weights 1 and middle weight w."""
    try:
        table = WeightTable.constant(1, w_text, 1)
    except (ValueError, TypeError) as exc:
        _fail(EXIT_BAD_SPEC, f"bad weight: {exc}")
    report = detect_phase(table, nmax)
    if fmt == "json":
        payload = {
            "w": w_text,
            "levels": [
                [c.value for c in row] for row in report.trace.rows
            ],
            "transitions": [list(t) for t in report.transitions],
            "ties": [list(t) for t in report.ties],
        }
        click.echo(_json_dump(payload))
        return
    rows = [["level", "branch0", "branch1", "branch2"]]
    for level, row in enumerate(report.trace.rows):
        rows.append([level, *(c.value for c in row)])
    if fmt == "csv":
        _csv_echo(rows)
        return
    for r in rows:
        click.echo("  ".join(str(x).ljust(8) for x in r))
    for k in (0, 1, 2):
        trans = ", ".join(map(str, report.transitions[k])) or "none"
        ties = ", ".join(map(str, report.ties[k])) or "none"
        click.echo(f"idle peg {k}: transitions at levels [{trans}]; ties at levels [{ties}]")


@main.command()
@click.option("--model", "model_text", required=True, help="Model JSON (inline or file path).")
@click.option("-n", "n", type=int, required=True, help="Number of discs.")
@click.option("--from", "source", type=int, required=True, help="Source peg (0-2).")
@click.option("--to", "target", type=int, required=True, help="Target peg (0-2).")
@click.option("--tie", type=click.Choice(["one", "two"]), default="one", show_default=True, help="Branch to follow where both strategies tie.")
@_FORMAT
@click.option("--plan-cap", type=int, default=None, help=f"Materialized move cap (default {DEFAULT_PLAN_CAP}; env HANOI_PLAN_CAP).")
def plan(model_text: str, n: int, source: int, target: int, tie: str, fmt: str, plan_cap: int | None) -> None:
    """Reconstruct one optimal move plan and its exact total cost."""
    model = _load_model(model_text)
    cap = _cap(plan_cap, "HANOI_PLAN_CAP", DEFAULT_PLAN_CAP)
    policy = BranchChoice.ONE_LDM if tie == "one" else BranchChoice.TWO_LDM
    table = lower(model)
    try:
        moves = reconstruct_plan(table, n, source, target, policy, max_moves=cap)
    except PlanSizeError as exc:
        _fail(EXIT_CAP, str(exc))
    except UnsolvableError as exc:
        _fail(EXIT_UNSOLVABLE, str(exc))
    except ValueError as exc:
        _fail(EXIT_BAD_SPEC, str(exc))
    total, _ = plan_cost(table, moves, State.perfect(source, n))
    if fmt == "json":
        payload = {
            "cost": str(total),
            "moves": [[m.disc, m.source, m.target] for m in moves],
        }
        click.echo(_json_dump(payload))
    elif fmt == "csv":
        rows = [["step", "disc", "source", "target"]]
        rows += [[i, m.disc, m.source, m.target] for i, m in enumerate(moves)]
        _csv_echo(rows)
    else:
        for m in moves:
            click.echo(f"disc {m.disc}: {m.source} -> {m.target}")
        click.echo(f"total cost {total} ({len(moves)} moves)")


@main.command()
@click.option("--name", required=True, help="Sequence name (e.g. jacobsthal, lichtenberg).")
@click.option("--count", type=int, required=True, help="Number of leading terms.")
@_FORMAT
def seq(name: str, count: int, fmt: str) -> None:
    """Print the first terms of a named integer sequence."""
    if count < 0:
        _fail(EXIT_BAD_SPEC, "count must be >= 0")
    try:
        values = [seq_eval(name, n) for n in range(count)]
    except ValueError as exc:
        _fail(EXIT_BAD_SPEC, str(exc))
    if fmt == "json":
        click.echo(_json_dump({"name": name, "values": values}))
    elif fmt == "csv":
        _csv_echo([["n", "value"], *[[n, v] for n, v in enumerate(values)]])
    else:
        click.echo(",".join(map(str, values)))


@main.command()
@click.option("--spec", "spec_text", required=True, help="Recurrence JSON (inline or file path).")
@click.option("--count", type=int, required=True, help="Number of derived values.")
@_FORMAT
def transform(spec_text: str, count: int, fmt: str) -> None:
    """Push a disc-cost recurrence through the cost transform.

    Prints the derived minimal-cost values and the linear recurrence they
    provably satisfy (one order higher than the input).
    """
    if count < 1:
        _fail(EXIT_BAD_SPEC, "count must be >= 1")
    candidate = spec_text.strip()
    if not candidate.startswith("{"):
        path = Path(candidate)
        if not path.is_file():
            _fail(EXIT_BAD_SPEC, f"spec file not found: {candidate}")
        candidate = path.read_text()
    try:
        data = json.loads(candidate)
        spec = seqspec_from_json(data)
        t0 = data.get("t0", 0)
        result = seq_transform(spec, t0, max(count - 1, spec.order))
    except (ValueError, TypeError) as exc:
        _fail(EXIT_BAD_SPEC, f"bad sequence spec: {exc}")
    values = result.values[:count]
    if fmt == "json":
        payload = {
            "values": [str(v) for v in values],
            "tau": [str(t) for t in result.tau],
            "b": str(result.b),
            "recurrence": result.recurrence_text(),
        }
        click.echo(_json_dump(payload))
    elif fmt == "csv":
        _csv_echo([["n", "t"], *[[n, str(v)] for n, v in enumerate(values)]])
    else:
        click.echo(",".join(str(v) for v in values))
        click.echo(result.recurrence_text())


@main.command()
@click.option("--model", "model_text", required=True, help="Model JSON (inline or file path).")
@click.option("-n", "n", type=int, required=True, help="Number of discs.")
@click.option("--from", "source", type=int, required=True, help="Source peg (0-2).")
@click.option("--to", "target", type=int, required=True, help="Target peg (0-2).")
@click.option("--oracle-cap", type=int, default=None, help=f"Oracle disc cap (default {ORACLE_CAP_DEFAULT}; env HANOI_ORACLE_CAP).")
@_FORMAT
def count(model_text: str, n: int, source: int, target: int, oracle_cap: int | None, fmt: str) -> None:
    """Count the distinct minimum-cost move sequences between perfect states."""
    model = _load_model(model_text)
    cap = _cap(oracle_cap, "HANOI_ORACLE_CAP", ORACLE_CAP_DEFAULT)
    try:
        value = count_shortest_paths(
            lower(model), n, State.perfect(source, n), State.perfect(target, n), max_discs=cap
        )
    except OracleCapError as exc:
        _fail(EXIT_CAP, str(exc))
    except (UnsolvableError, UnboundedCountError) as exc:
        _fail(EXIT_UNSOLVABLE, str(exc))
    except ValueError as exc:
        _fail(EXIT_BAD_SPEC, str(exc))
    if fmt == "json":
        click.echo(_json_dump({"count": str(value)}))
    elif fmt == "csv":
        _csv_echo([["count"], [value]])
    else:
        click.echo(str(value))


@main.command()
@click.option("--model", "model_text", required=True, help="Model JSON (inline or file path).")
@click.option("-n", "n", type=int, required=True, help="Number of discs.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None, help="Write CSV here instead of stdout.")
@click.option("--oracle-cap", type=int, default=None, help=f"Oracle disc cap (default {ORACLE_CAP_DEFAULT}; env HANOI_ORACLE_CAP).")
def graph(model_text: str, n: int, output: str | None, oracle_cap: int | None) -> None:
    """Export the weighted state graph as a CSV edge list."""
    model = _load_model(model_text)
    cap = _cap(oracle_cap, "HANOI_ORACLE_CAP", ORACLE_CAP_DEFAULT)
    try:
        if output is None:
            buf = io.StringIO()
            export_edges(lower(model), n, buf, max_discs=cap)
            click.echo(buf.getvalue(), nl=False)
        else:
            with open(output, "w", newline="") as fh:
                written = export_edges(lower(model), n, fh, max_discs=cap)
            click.echo(f"wrote {written} edges to {output}", err=True)
    except OracleCapError as exc:
        _fail(EXIT_CAP, str(exc))


if __name__ == "__main__":
    main()
