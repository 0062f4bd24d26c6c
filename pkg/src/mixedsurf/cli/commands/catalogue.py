"""Group catalogue commands."""
from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer
from rich.progress import Progress
from rich.table import Table

from mixedsurf.config import get_settings
from mixedsurf.core.errors import CatalogueValidationError
from mixedsurf.groups import build_catalogue, load_catalogue, name_group, save_catalogue, validate_catalogue

from ..common import console, err_console, exit_on_error

app = typer.Typer(help="Validate, build and inspect group catalogues")


@app.command("validate")
def validate(
    path: Path = typer.Argument(..., help="Catalogue JSON"),
    oracle_max: int = typer.Option(16, "--oracle-max", help="Brute-force cross-check up to this order"),
):
    """Check the group axioms, declared counts and small orders against enumeration."""
    with exit_on_error():
        cat = load_catalogue(path)
        problems = validate_catalogue(cat, oracle_max=oracle_max)
        if problems:
            for problem in problems:
                err_console.print(f"[red]-[/red] {problem}")
            raise CatalogueValidationError(f"{len(problems)} problems in {path}")
    console.print(
        f"[green]OK[/green] {len(cat)} groups, complete orders: "
        f"{', '.join(str(n) for n in sorted(cat.complete_orders)) or 'none'}"
    )


@app.command("build")
def build(
    max_order: Optional[int] = typer.Option(None, "--max-order", "-n", help="Largest order to build"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output file (default: the user catalogue)"),
):
    """Build all solvable groups up to an order as iterated cyclic extensions."""
    settings = get_settings()
    max_order = max_order or settings.catalogue_build_max_order
    out = out or settings.catalogue_path
    incomplete: list[int] = []
    with Progress(console=err_console, transient=True) as progress:
        task = progress.add_task("Building", total=max_order)

        def on_order(n: int, count: int, complete: bool) -> None:
            if not complete:
                incomplete.append(n)
            progress.update(task, completed=n, description=f"order {n}: {count} groups")

        with exit_on_error():
            cat = build_catalogue(max_order, settings.automorphism_cap, on_order=on_order)
    save_catalogue(cat, out)
    console.print(f"[green]Wrote {len(cat)} groups to[/green] {out}")
    if incomplete:
        console.print(f"[yellow]Incomplete orders:[/yellow] {', '.join(map(str, incomplete))}")


@app.command("show")
def show(
    path: Path = typer.Argument(..., help="Catalogue JSON"),
    order: Optional[int] = typer.Option(None, "--order", "-n", help="Only this order"),
):
    """List the groups of a catalogue."""
    with exit_on_error():
        cat = load_catalogue(path)
    table = Table(title=f"Catalogue {path.name}")
    table.add_column("Order", justify="right", style="cyan")
    table.add_column("Label")
    table.add_column("Name", style="green")
    table.add_column("Abelian")
    table.add_column("Complete")
    for n in cat.orders:
        if order is not None and n != order:
            continue
        for entry in cat.entries[n]:
            table.add_row(
                str(n),
                entry.label,
                name_group(entry.group) or "",
                "yes" if entry.group.is_abelian else "no",
                "yes" if cat.is_complete(n) else "no",
            )
    console.print(table)
