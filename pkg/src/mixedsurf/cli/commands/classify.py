"""The classification run."""
from __future__ import annotations

import time
from pathlib import Path
from typing import Optional

import typer
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn, TimeElapsedColumn

from mixedsurf.config import OutputFormat
from mixedsurf.db import Repository
from mixedsurf.pipeline import build_search_config, emit, run_search

from ..common import console, err_console, exit_on_error


def classify(
    pg: int = typer.Option(..., "--pg", help="Geometric genus p_g"),
    q: int = typer.Option(..., "--q", help="Irregularity q"),
    k2: str = typer.Option(..., "--k2", help="K^2 value or range, e.g. 3 or 1..8"),
    catalogue: Optional[Path] = typer.Option(None, "--catalogue", "-c", help="Group catalogue JSON"),
    max_order: Optional[int] = typer.Option(None, "--max-order", help="Skip branches with |G| above this"),
    jobs: Optional[int] = typer.Option(None, "--jobs", "-j", help="Worker processes"),
    oracle_check: bool = typer.Option(False, "--oracle-check", help="Cross-check singularities by brute force"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the family table here"),
    fmt: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help="tsv or json"),
    skip_report: Optional[Path] = typer.Option(None, "--skip-report", help="Write skipped branches here"),
    no_save: bool = typer.Option(False, "--no-save", help="Do not store the run"),
):
    """Classify the mixed quasi-etale surfaces with the given p_g, q and K^2."""
    with exit_on_error():
        config = build_search_config(
            pg, q, k2, catalogue=catalogue, max_order=max_order, jobs=jobs,
            output_format=fmt, oracle_check=oracle_check,
        )
        started = time.perf_counter()
        with Progress(
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            TimeElapsedColumn(),
            console=err_console,
            transient=True,
        ) as progress:
            task = progress.add_task("Searching", total=None)
            result = run_search(
                config,
                progress=lambda n: progress.advance(task, n),
                on_plan=lambda total: progress.update(task, total=total),
            )
        elapsed = time.perf_counter() - started
        try:
            text = emit(result.records, result.skips, config.output_format, out, skip_report)
        except OSError as exc:
            err_console.print(f"[red]Cannot write output:[/red] {exc}")
            raise typer.Exit(1) from exc

    if out is None:
        typer.echo(text, nl=False)
    err_console.print(
        f"[green]{len(result.records)} families[/green], {len(result.skips)} skipped branches, "
        f"{result.shards} shards in {elapsed:.1f}s"
    )
    if not no_save:
        repo = Repository()
        run = repo.add_run(config, result.records, result.skips, elapsed)
        err_console.print(f"[dim]Stored as run #{run.id}[/dim]")
        repo.close()
