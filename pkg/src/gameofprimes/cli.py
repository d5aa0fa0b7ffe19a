"""Command-line interface.

Exit statuses: 0 ok/holds, 1 usage error, 2 budget exceeded,
3 verdict failed, 4 I/O error.
"""
from __future__ import annotations

import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

import click

from . import __version__
from .analysis import (
    VALIDATORS,
    claim_checker,
    equivalent_starts,
    odd_dimension_census,
    quad_search_arithmetic,
    quad_search_grid,
)
from .automaton import BudgetExceeded, detect_cycle, run
from .grid import GridSpec, linear_index
from .primes import gap_signature
from .reference import KNOWN_PERIODS, KNOWN_QUADRUPLES
from .sonify import note_sequence, render_wav

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_FAILED, EXIT_IO = 0, 1, 2, 3, 4
DEFAULT_MAX_DAYS = 10**6

FORMATS = click.Choice(["text", "json", "jsonl"])


def parse_range(text: str) -> list[int]:
    """'5..13' -> [5..13]; '3,5,9' -> [3, 5, 9]; '7' -> [7]."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise click.BadParameter(f"cannot parse range {text!r}") from None


def manifest(command: str, params: dict, fmt: str) -> dict:
    return {"command": command, "params": params, "version": __version__, "format": fmt}


def emit(man: dict, records: list[dict], text_lines) -> None:
    fmt = man["format"]
    if fmt == "json":
        click.echo(json.dumps({"manifest": man, "results": records}, indent=2))
    elif fmt == "jsonl":
        for rec in records:
            click.echo(json.dumps({"manifest": man, **rec}))
    else:
        for line in text_lines():
            click.echo(line)


def make_spec(dim: int, start: int, step: int) -> GridSpec:
    try:
        return GridSpec(dim, start, step)
    except (ValueError, OverflowError) as exc:
        raise click.BadParameter(str(exc)) from None


def render_board(spec: GridSpec, excited_idx: set[int]) -> list[str]:
    n = spec.dim
    width = len(str(spec.last_value)) + 2
    rows = []
    for r in range(n):
        cells = []
        for c in range(n):
            li = linear_index(spec, (r, c))
            v = str(spec.start + spec.step * li)
            cells.append((f"*{v}*" if li in excited_idx else v).rjust(width))
        rows.append(" ".join(cells))
    return rows


grid_options = [
    click.option("--dim", type=int, required=True, help="Side length n."),
    click.option("--start", type=int, default=1, show_default=True, help="Top-left value."),
    click.option("--step", type=int, default=1, show_default=True, help="Common difference."),
]
format_option = click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)


def with_grid(f):
    for opt in reversed(grid_options):
        f = opt(f)
    return f


@click.group()
@click.version_option(__version__)
def cli():
    """Game of Primes: simulate, analyse and sonify prime-driven boards."""


@cli.command()
@with_grid
@click.option("--days", type=int, default=10, show_default=True)
@click.option("--plot", type=click.Path(dir_okay=False), default=None, help="Write a figure of every day.")
@format_option
@click.pass_context
def simulate(ctx, dim, start, step, days, plot, fmt):
    """Run a board for DAYS days and show every day."""
    if days < 0:
        raise click.BadParameter("days must be >= 0")
    spec = make_spec(dim, start, step)
    mask = spec.prime_mask()
    states = run(spec, days, mask)
    man = manifest("simulate", {"dim": dim, "start": start, "step": step, "days": days}, fmt)
    records = [s.record(spec) for s in states]

    def text():
        yield f"{dim}x{dim} board, start {start}, step {step}.  *v* = excited"
        for s in states:
            yield ""
            yield f"Day {s.day}  ({s.count} excited)"
            yield from render_board(spec, set(s.excited_indices()))

    emit(man, records, text)
    if plot:
        _plot(ctx, "trajectory", spec, states, plot, mask.flags)


def _plot(ctx, kind, *args):
    from . import plotting

    try:
        if kind == "trajectory":
            plotting.plot_trajectory(*args[:3], primes=args[3])
        elif kind == "table":
            plotting.plot_cycle_table(*args)
        else:
            plotting.plot_notes(*args)
    except OSError as exc:
        click.echo(f"error: cannot write figure: {exc}", err=True)
        ctx.exit(EXIT_IO)


@cli.command()
@with_grid
@click.option("--max-days", type=int, default=DEFAULT_MAX_DAYS, show_default=True)
@format_option
@click.pass_context
def cycle(ctx, dim, start, step, max_days, fmt):
    """Find the tail length and period of a board."""
    if max_days < 1:
        raise click.BadParameter("max-days must be >= 1")
    spec = make_spec(dim, start, step)
    man = manifest("cycle", {"dim": dim, "start": start, "step": step, "max_days": max_days}, fmt)
    try:
        rep = detect_cycle(spec, max_days)
    except BudgetExceeded as exc:
        rec = {"dim": dim, "status": "budget_exceeded", "days_explored": exc.days_explored}
        emit(man, [rec], lambda: [f"{dim}x{dim}: no repeat within {exc.days_explored} days"])
        ctx.exit(EXIT_BUDGET)
    rec = {"dim": dim, "status": "ok", **rep.as_dict()}
    emit(man, [rec], lambda: [
        f"tail_mu={rep.tail_mu}",
        f"period_lambda={rep.period_lambda}",
        f"days_explored={rep.days_explored}",
    ])


def _table_row(args):
    dim, max_days = args
    expected = KNOWN_PERIODS.get(dim)
    row = {"dim": dim, "expected_lambda": expected}
    try:
        rep = detect_cycle(GridSpec(dim), max_days)
    except BudgetExceeded as exc:
        row.update(status="budget_exceeded", tail_mu=None, period_lambda=None, days_explored=exc.days_explored)
    else:
        row.update(status="ok", **rep.as_dict())
    if expected is None or row["period_lambda"] is None:
        row["match"] = None
    else:
        row["match"] = row["period_lambda"] == expected
    return row


def cycle_table(dims: list[int], max_days: int, jobs: int | None = None) -> list[dict]:
    work = [(d, max_days) for d in dims]
    jobs = jobs or min(len(dims), os.cpu_count() or 1)
    if jobs <= 1 or len(dims) <= 1:
        return [_table_row(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_table_row, work))


@cli.command()
@click.option("--dims", default="1..10", show_default=True, help="Range 'a..b' or list 'a,b,c'.")
@click.option("--max-days", type=int, default=DEFAULT_MAX_DAYS, show_default=True)
@click.option("--jobs", type=int, default=None, help="Worker processes (default: one per CPU).")
@click.option("--plot", type=click.Path(dir_okay=False), default=None)
@format_option
@click.pass_context
def table(ctx, dims, max_days, jobs, plot, fmt):
    """Cycle table of NGOPM boards over a range of dimensions."""
    dim_list = parse_range(dims)
    if any(d < 1 for d in dim_list):
        raise click.BadParameter("dimensions must be >= 1")
    rows = cycle_table(dim_list, max_days, jobs)
    man = manifest("table", {"dims": dim_list, "max_days": max_days}, fmt)

    def fmt_cell(v):
        return "-" if v is None else str(v)

    def text():
        yield f"{'dim':>4} {'mu':>7} {'lambda':>8} {'expected':>9} match"
        for r in rows:
            m = "" if r["match"] is None else ("yes" if r["match"] else "NO")
            yield (f"{r['dim']:>4} {fmt_cell(r['tail_mu']):>7} {fmt_cell(r['period_lambda']):>8} "
                   f"{fmt_cell(r['expected_lambda']):>9} {m}")

    emit(man, rows, text)
    if plot:
        _plot(ctx, "table", rows, plot)
    if any(r["status"] != "ok" for r in rows):
        ctx.exit(EXIT_BUDGET)


@cli.command()
@click.option("--dim", type=int, default=None)
@click.option("--dims", default=None, help="Range 'a..b' or list 'a,b,c'.")
@click.option("--mode", type=click.Choice(["arithmetic", "grid"]), default="arithmetic", show_default=True)
@format_option
def quad(dim, dims, mode, fmt):
    """Smallest cell with four prime neighbours, per dimension."""
    if (dim is None) == (dims is None):
        raise click.UsageError("give exactly one of --dim or --dims")
    dim_list = [dim] if dim is not None else parse_range(dims)
    if any(d < 1 for d in dim_list) or (mode == "arithmetic" and any(d < 3 for d in dim_list)):
        raise click.BadParameter("arithmetic mode needs dimensions >= 3, grid mode >= 1")
    records = []
    for k in dim_list:
        hit = quad_search_arithmetic(k) if mode == "arithmetic" else quad_search_grid(GridSpec(k))
        rec = {"dim": k, "mode": mode, "x": hit.x if hit else None}
        if mode == "arithmetic":
            rec["expected_x"] = KNOWN_QUADRUPLES.get(k)
        records.append(rec)
    man = manifest("quad", {"dims": dim_list, "mode": mode}, fmt)
    emit(man, records, lambda: [f"{r['dim']:>4}  {r['x'] if r['x'] is not None else '—'}" for r in records])


@cli.command()
@click.option("--p-max", type=int, default=10000, show_default=True)
@format_option
@click.pass_context
def claim(ctx, p_max, fmt):
    """Check every prime 5..P_MAX for an arithmetic quadruple."""
    failures = claim_checker(p_max)
    man = manifest("claim", {"p_max": p_max}, fmt)
    rec = {"p_max": p_max, "failures": failures}
    emit(man, [rec], lambda: [f"primes 5..{p_max}: {len(failures)} without a quadruple {failures or ''}"])
    if failures:
        ctx.exit(EXIT_FAILED)


@cli.command()
@click.option("--lo", type=int, default=3, show_default=True)
@click.option("--hi", type=int, default=100, show_default=True)
@format_option
def census(lo, hi, fmt):
    """Arithmetic quadruple search over every odd dimension in [LO, HI]."""
    res = odd_dimension_census(lo, hi)
    records = [{"dim": k, "x": x} for k, x in res.items()]
    man = manifest("census", {"lo": lo, "hi": hi}, fmt)

    def text():
        for k, x in res.items():
            yield f"{k:>4}  {x if x is not None else '—'}"
        yield f"{sum(x is not None for x in res.values())} of {len(res)} odd dimensions have one"

    emit(man, records, text)


@cli.command()
@click.option("--dim", type=int, required=True)
@click.option("--start", type=int, required=True)
@click.option("--bound", type=int, required=True)
@click.option("--limit", type=int, default=10, show_default=True)
@format_option
def equiv(dim, start, bound, limit, fmt):
    """Later starting values whose boards play the identical game."""
    make_spec(dim, start, 1)
    sig = gap_signature(start, dim * dim)
    starts = equivalent_starts(dim, start, bound, limit)
    man = manifest("equiv", {"dim": dim, "start": start, "bound": bound, "limit": limit}, fmt)
    rec = {"starts": starts, "prime_offsets": list(sig.prime_offsets), "gaps": list(sig.gaps)}
    emit(man, [rec], lambda: [
        f"gaps {', '.join(map(str, sig.gaps))}",
        "starts " + (", ".join(map(str, starts)) if starts else "(none)"),
    ])


@cli.command()
@click.option("--theorem", type=click.Choice(sorted(VALIDATORS)), required=True)
@with_grid
@click.option("--max-days", type=int, default=DEFAULT_MAX_DAYS, show_default=True)
@click.option("--horizon", type=int, default=50, show_default=True)
@format_option
@click.pass_context
def verify(ctx, theorem, dim, start, step, max_days, horizon, fmt):
    """Check one theorem on one board."""
    spec = make_spec(dim, start, step)
    params = {"theorem": theorem, "dim": dim, "start": start, "step": step,
              "max_days": max_days, "horizon": horizon}
    man = manifest("verify", params, fmt)
    try:
        if theorem in ("4.1", "4.2"):
            verdict = VALIDATORS[theorem](spec, max_days)
        elif theorem == "4.3":
            verdict = VALIDATORS[theorem](spec, horizon)
        else:
            verdict = VALIDATORS[theorem](spec)
    except BudgetExceeded as exc:
        rec = {"theorem_id": theorem, "status": "budget_exceeded", "days_explored": exc.days_explored}
        emit(man, [rec], lambda: [f"{theorem}: budget exceeded after {exc.days_explored} days"])
        ctx.exit(EXIT_BUDGET)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None
    emit(man, [verdict.as_dict()], lambda: [
        f"{theorem}: {verdict.status}" + (f"  ({verdict.witness})" if verdict.witness else "")
    ])
    if not verdict.holds:
        ctx.exit(EXIT_FAILED)


@cli.command()
@with_grid
@click.option("--days", type=int, default=5, show_default=True)
@click.option("--note-duration", type=float, default=0.5, show_default=True)
@click.option("--wav", "wav_path", type=click.Path(dir_okay=False), default=None)
@click.option("--plot", type=click.Path(dir_okay=False), default=None)
@format_option
@click.pass_context
def music(ctx, dim, start, step, days, note_duration, wav_path, plot, fmt):
    """Notes for days 1..DAYS, optionally rendered to a WAV file."""
    if days < 1:
        raise click.BadParameter("days must be >= 1")
    if note_duration <= 0:
        raise click.BadParameter("note-duration must be positive")
    spec = make_spec(dim, start, step)
    notes = note_sequence(spec, 1, days)
    params = {"dim": dim, "start": start, "step": step, "days": days,
              "note_duration": note_duration, "wav": wav_path}
    man = manifest("music", params, fmt)
    emit(man, [n.as_dict() for n in notes], lambda: [
        f"Day {n.day} : {n.pitch_class} : {n.name}  ({n.excited_count} excited, {n.frequency} Hz)" for n in notes
    ])
    if wav_path:
        try:
            with open(wav_path, "wb") as fh:
                render_wav(notes, note_duration, fh)
        except OSError as exc:
            click.echo(f"error: cannot write {wav_path}: {exc}", err=True)
            ctx.exit(EXIT_IO)
    if plot:
        _plot(ctx, "notes", notes, plot)


def main(argv=None) -> int:
    try:
        rv = cli.main(args=argv, prog_name="gameofprimes", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    return rv if isinstance(rv, int) else EXIT_OK


def entry() -> None:
    sys.exit(main())
