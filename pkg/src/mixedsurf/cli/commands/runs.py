"""Stored classification runs."""
from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from mixedsurf.config import OutputFormat, get_settings
from mixedsurf.db import Repository
from mixedsurf.pipeline import emit

from ..common import console

app = typer.Typer(help="Manage stored classification runs")


@app.command("list")
def list_runs(
    limit: int = typer.Option(20, "--limit", "-l", help="Maximum runs to show"),
):
    """List stored runs, newest first."""
    repo = Repository()
    runs = repo.list_runs(limit=limit)
    if not runs:
        repo.close()
        console.print("[yellow]No stored runs[/yellow]")
        raise typer.Exit(0)

    table = Table(title=f"Runs ({len(runs)})")
    table.add_column("ID", style="cyan")
    table.add_column("Created")
    table.add_column("p_g", justify="right")
    table.add_column("q", justify="right")
    table.add_column("K2")
    table.add_column("Families", justify="right", style="green")
    table.add_column("Skipped", justify="right", style="yellow")
    table.add_column("Time", justify="right")
    for run in runs:
        k2 = str(run.k2_min) if run.k2_min == run.k2_max else f"{run.k2_min}..{run.k2_max}"
        table.add_row(
            str(run.id),
            run.created_at.strftime("%Y-%m-%d %H:%M"),
            str(run.pg),
            str(run.q),
            k2,
            str(run.n_families),
            str(run.n_skipped),
            f"{run.elapsed_seconds:.1f}s",
        )
    repo.close()
    console.print(table)


@app.command("show")
def show_run(run_id: int = typer.Argument(..., help="Run ID")):
    """Show the families and skips of a run."""
    repo = Repository()
    run = repo.get_run(run_id)
    if run is None:
        repo.close()
        console.print(f"[red]Run {run_id} not found[/red]")
        raise typer.Exit(1)
    records = repo.get_families(run_id)
    skips = repo.get_skips(run_id)
    repo.close()

    table = Table(title=f"Run #{run_id}: p_g={run.pg}, q={run.q}, K2 {run.k2_min}..{run.k2_max}")
    for column in ("K2", "Basket", "Signature", "G0", "G", "g(C)", "g_alb", "Minimal", "Orbits"):
        table.add_column(column)
    for r in records:
        table.add_row(
            str(r.k2), r.basket, r.signature, r.g0, r.g, str(r.g_c),
            "-" if r.g_alb is None else str(r.g_alb), r.minimal.value, str(r.n_orbits),
        )
    console.print(table)
    if skips:
        skipped = Table(title="Skipped branches")
        for column in ("K2", "Basket", "Signature", "|G0|", "Reason"):
            skipped.add_column(column)
        for s in skips:
            skipped.add_row(str(s.k2), s.basket, s.signature, str(s.ord_g0), s.reason.value)
        console.print(skipped)


@app.command("export")
def export_run(
    run_id: int = typer.Argument(..., help="Run ID"),
    fmt: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help="tsv or json"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output file (default: runs directory)"),
    skip_report: Optional[Path] = typer.Option(None, "--skip-report", help="Also write the skips here"),
):
    """Write a stored run as TSV or JSON."""
    settings = get_settings()
    fmt = fmt or settings.output_format
    repo = Repository()
    if repo.get_run(run_id) is None:
        repo.close()
        console.print(f"[red]Run {run_id} not found[/red]")
        raise typer.Exit(1)
    records = repo.get_families(run_id)
    skips = repo.get_skips(run_id)
    repo.close()
    out = out or settings.runs_dir / f"run-{run_id}.{fmt.value}"
    emit(records, skips, fmt, out, skip_report)
    console.print(f"[green]Exported {len(records)} families to[/green] {out}")


@app.command("delete")
def delete_run(
    run_id: int = typer.Argument(..., help="Run ID"),
    yes: bool = typer.Option(False, "--yes", "-y", help="Skip confirmation"),
):
    """Delete a stored run."""
    if not yes and not typer.confirm(f"Delete run {run_id}?"):
        raise typer.Exit(0)
    repo = Repository()
    deleted = repo.delete_run(run_id)
    repo.close()
    if not deleted:
        console.print(f"[red]Run {run_id} not found[/red]")
        raise typer.Exit(1)
    console.print(f"[green]Deleted run {run_id}[/green]")
