"""Main Typer CLI application."""
from __future__ import annotations

from typing import Optional

import typer

from mixedsurf import __version__
from mixedsurf.config import LogLevel, get_settings
from mixedsurf.core.log import setup_logging
from mixedsurf.db import init_db

from .commands import analyze, baskets, catalogue, classify, runs, singularity
from .common import console

app = typer.Typer(
    name="mixedsurf",
    help="Classification of mixed quasi-etale quotient surfaces (C x C)/G.",
    no_args_is_help=True,
)

# Register command groups
app.add_typer(catalogue.app, name="catalogue", help="Validate, build and inspect group catalogues")
app.add_typer(runs.app, name="runs", help="Manage stored classification runs")

app.command("classify")(classify.classify)
app.command("analyze")(analyze.analyze)
app.command("baskets")(baskets.baskets)
app.command("singularity")(singularity.singularity)


@app.command()
def init():
    """Initialize the mixedsurf home directory, database and config file."""
    settings = get_settings()
    settings.ensure_directories()
    init_db()
    if not settings.config_file.exists():
        settings.save_to_file()

    console.print(f"[green]Initialized mixedsurf at:[/green] {settings.home_dir}")
    console.print(f"  Database: {settings.db_path}")
    console.print(f"  Config: {settings.config_file}")
    console.print(f"  Runs: {settings.runs_dir}")
    if settings.catalogue_path.exists():
        console.print(f"  Catalogue: {settings.catalogue_path}")
    else:
        console.print(
            f"[dim]Orders up to {settings.catalogue_build_max_order} are built on first use "
            "or with 'mixedsurf catalogue build'.[/dim]"
        )


def _show_version(value: bool) -> None:
    if value:
        console.print(f"mixedsurf {__version__}")
        raise typer.Exit(0)


@app.callback()
def callback(
    log_level: Optional[LogLevel] = typer.Option(None, "--log-level", help="Logging level"),
    verbose: int = typer.Option(0, "--verbose", "-v", count=True, help="-v for INFO, -vv for DEBUG"),
    version: bool = typer.Option(
        False, "--version", callback=_show_version, is_eager=True, help="Show the version and exit"
    ),
):
    """Configure logging and make sure the run store exists."""
    level = log_level or get_settings().log_level
    setup_logging(level.value, verbose)
    init_db()


def main():
    """Main entry point."""
    app()


if __name__ == "__main__":
    main()
