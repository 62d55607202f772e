"""CLI interface for ProofKit."""

import os
import sys
from pathlib import Path
from typing import Mapping, Optional, Sequence

import typer

try:  # typer >= 0.22 vendors its own copy of click
    from typer._click import exceptions as click
except ImportError:
    import click
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from proofkit import __version__
from proofkit.core.runner import ProofRunner
from proofkit.report_builder import render_abducts, render_deducts
from proofkit.schemas.prover import (
    Outcome,
    ProverOptions,
    RenderOptions,
    RenderStyle,
    RunStatistics,
    SolverChoice,
)
from proofkit.schemas.run import RunConfig, RunResult
from proofkit.utils.config import get_config, reset_config
from proofkit.utils.exceptions import ConfigError, ProofCheckError, ProofKitError
from proofkit.utils.logger import setup_logger
from proofkit.utils.paths import resolve_problem_path

EXIT_PROVED = 0
EXIT_UNPROVABLE = 1
EXIT_TIMEOUT = 2
EXIT_INPUT_ERROR = 3

OUTCOME_EXIT_CODES = {
    Outcome.PROVED: EXIT_PROVED,
    Outcome.PROVED_WITH_ABDUCTS: EXIT_PROVED,
    Outcome.NO_CONSISTENT_ABDUCTS: EXIT_UNPROVABLE,
    Outcome.UNPROVABLE_AT_BOUND: EXIT_UNPROVABLE,
    Outcome.TIMEOUT: EXIT_TIMEOUT,
}

app = typer.Typer(
    name="proofkit",
    help="ProofKit - coherent-logic theorem prover",
    add_completion=False,
)
# stdout carries proofs only
err_console = Console(stderr=True)


def _version_callback(value: bool) -> None:
    if value:
        typer.echo(f"ProofKit v{__version__}")
        raise typer.Exit(EXIT_PROVED)


@app.command()
def prove(
    problem: str = typer.Argument(..., help="Problem file, or the name of a bundled corpus problem"),
    time_limit: Optional[float] = typer.Option(None, "-l", "--time-limit", help="Time limit in seconds"),
    max_len: Optional[int] = typer.Option(None, "-m", "--max-len", help="Maximum proof length"),
    num_abducts: Optional[int] = typer.Option(None, "-b", "--abducts", help="Number of abduct slots"),
    deduct_all: bool = typer.Option(False, "--deduct-all", help="List every goal that fills the wildcards"),
    solver: Optional[SolverChoice] = typer.Option(None, "--solver", help="SAT backend"),
    external_solver: Optional[Path] = typer.Option(
        None, "--external-solver", help="DIMACS solver executable"
    ),
    output_format: RenderStyle = typer.Option(RenderStyle.TEXT, "--format", help="Proof output format"),
    dump_cnf: Optional[Path] = typer.Option(None, "--dump-cnf", help="Write the last CNF to this file"),
    dump_constraints: Optional[Path] = typer.Option(
        None, "--dump-constraints", help="Write the last constraint problem to this file"
    ),
    seed: Optional[int] = typer.Option(None, "--seed", help="Solver seed"),
    deepen: bool = typer.Option(True, "--deepen/--no-deepen", help="Try lengths from the shortest up"),
    check: Optional[Path] = typer.Option(
        None, "--check", help="Check this structured proof instead of searching"
    ),
    all_abducts: bool = typer.Option(False, "--all-abducts", help="Also list inconsistent abducts"),
    stats: bool = typer.Option(False, "--stats", help="Print search statistics to stderr"),
    log_level: Optional[str] = typer.Option(None, "--log-level", help="DEBUG, INFO, WARNING or ERROR"),
    version: bool = typer.Option(
        False, "--version", callback=_version_callback, is_eager=True, help="Show the version"
    ),
):
    """
    Prove the conjecture of a problem file.

    Example:
        proofkit -l100 -m8 varignon
        proofkit -l100 -m8 -b1 corpus/varignon_inverse1.p
    """
    try:
        settings = get_config()
    except ConfigError as e:
        err_console.print(f"[red]{escape(str(e))}[/red]")
        raise typer.Exit(EXIT_INPUT_ERROR)
    setup_logger(level=log_level or settings.log_level, log_file=settings.log_file)

    path = resolve_problem_path(problem)
    if not path.is_file():
        err_console.print(f"[red]Problem file not found: {escape(problem)}[/red]")
        raise typer.Exit(EXIT_INPUT_ERROR)

    try:
        options = ProverOptions.from_settings(
            settings,
            time_limit=time_limit,
            max_len=max_len,
            num_abducts=num_abducts,
            solver=solver,
            external_solver=external_solver,
            seed=seed,
            deepen=deepen,
            deduct_all=deduct_all,
            dump_cnf=dump_cnf,
            dump_constraints=dump_constraints,
        )
        config = RunConfig(
            problem=path,
            options=options,
            render=RenderOptions(style=output_format),
            check_file=check,
        )
    except ValidationError as e:
        err_console.print(f"[red]Invalid options: {escape(str(e))}[/red]")
        raise typer.Exit(EXIT_INPUT_ERROR)

    runner = ProofRunner(config)
    try:
        if check is not None:
            result = runner.check()
        else:
            result = _run_with_progress(runner)
    except ProofCheckError:
        raise
    except (ProofKitError, OSError) as e:
        err_console.print(f"[red]{type(e).__name__}: {escape(str(e))}[/red]")
        raise typer.Exit(EXIT_INPUT_ERROR)

    if check is not None:
        raise typer.Exit(_report_check(result))

    _report(runner, result, all_abducts)
    if stats and result.result is not None:
        err_console.print(statistics_table(result.result.statistics))
    raise typer.Exit(OUTCOME_EXIT_CODES[result.outcome])


def _run_with_progress(runner: ProofRunner) -> RunResult:
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=err_console,
        transient=True,
        disable=not err_console.is_terminal,
    ) as progress:
        task = progress.add_task("[cyan]Searching...", total=None)

        def update_progress(length: int, status: str):
            progress.update(task, description=f"[cyan]Length {length}: {status}")

        return runner.run(progress_callback=update_progress)


def _report(runner: ProofRunner, result: RunResult, all_abducts: bool) -> None:
    prover_result = result.result
    if result.rendered:
        typer.echo(result.rendered, nl=False)

    if result.config.render.style == RenderStyle.TEXT:
        if prover_result.abducts:
            rejected = not prover_result.consistent_abducts
            listing = render_abducts(prover_result, runner.theory, all_verdicts=all_abducts or rejected)
            if listing:
                typer.echo("Rejected abduct tuples:" if rejected else "Abduct tuples:")
                typer.echo(listing, nl=False)
            if not prover_result.consistent_abducts:
                err_console.print("[yellow]No abduct passed the consistency check[/yellow]")
        if prover_result.deducts:
            typer.echo("Deducts found:")
            typer.echo(render_deducts(prover_result, runner.theory), nl=False)

    if prover_result.outcome == Outcome.UNPROVABLE_AT_BOUND:
        err_console.print(
            f"[yellow]No proof of length at most {result.config.options.max_len}[/yellow]"
        )
    elif prover_result.outcome == Outcome.TIMEOUT:
        err_console.print(
            f"[yellow]Time limit of {result.config.options.time_limit}s reached[/yellow]"
        )


def _report_check(result: RunResult) -> int:
    if result.accepted:
        typer.echo("Proof accepted.")
        return EXIT_PROVED
    err_console.print(f"[red]Proof rejected: {escape(str(result.violation))}[/red]")
    return EXIT_UNPROVABLE


def statistics_table(statistics: RunStatistics) -> Table:
    """Per-length solver statistics as a rich table."""
    table = Table(title="Search statistics")
    table.add_column("Length", justify="right")
    table.add_column("Status")
    table.add_column("Variables", justify="right")
    table.add_column("Clauses", justify="right")
    table.add_column("Encode (s)", justify="right")
    table.add_column("Solve (s)", justify="right")
    for attempt in statistics.attempts:
        table.add_row(
            str(attempt.length),
            attempt.status,
            str(attempt.variables),
            str(attempt.clauses),
            f"{attempt.encode_seconds:.2f}",
            f"{attempt.solve_seconds:.2f}",
        )
    table.caption = (
        f"solver {statistics.solver or '-'}, {statistics.hints_used} hints, "
        f"{statistics.models_enumerated} models, {statistics.total_seconds:.2f}s total"
    )
    return table


def run_cli(argv: Sequence[str], env: Optional[Mapping[str, str]] = None) -> int:
    """
    Run the command line with `env` overlaid on the process environment.

    Returns:
        Exit code: 0 proved, 1 unprovable at the bound (or no consistent
        abducts, or proof rejected), 2 timeout, 3 input error
    """
    saved = dict(os.environ)
    os.environ.update(env or {})
    reset_config()
    try:
        code = app(args=list(argv), prog_name="proofkit", standalone_mode=False)
    except click.UsageError as e:
        err_console.print(f"[red]{escape(e.format_message())}[/red]")
        return EXIT_INPUT_ERROR
    except click.Abort:
        return EXIT_INPUT_ERROR
    finally:
        os.environ.clear()
        os.environ.update(saved)
        reset_config()
    return code if isinstance(code, int) else EXIT_PROVED


def main():
    """Entry point for CLI."""
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
