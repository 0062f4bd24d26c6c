"""Single-candidate analysis."""
from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer

from mixedsurf.config import OutputFormat, get_settings
from mixedsurf.groups import resolve_catalogue
from mixedsurf.pipeline import analyze_file, render_records

from ..common import exit_on_error


def analyze(
    input_path: Path = typer.Option(..., "--input", "-i", help="Analyze input JSON"),
    catalogue: Optional[Path] = typer.Option(None, "--catalogue", "-c", help="Catalogue used for labels"),
    fmt: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help="tsv or json"),
    oracle_check: bool = typer.Option(False, "--oracle-check", help="Cross-check singularities by brute force"),
):
    """Analyze one explicitly given G, G0, tau' and generating vector."""
    settings = get_settings()
    with exit_on_error():
        cat = resolve_catalogue(
            catalogue,
            settings.catalogue_path,
            settings.catalogue_build_max_order,
            settings.automorphism_cap,
        )
        record = analyze_file(input_path, cat, oracle_check, settings.oracle_cap)
    text = render_records([record], fmt or settings.output_format)
    typer.echo(text, nl=False)
