"""Preview of the search frontier."""
from __future__ import annotations

from typing import Optional

import typer
from rich.table import Table

from mixedsurf.config import get_settings
from mixedsurf.core.errors import InputError
from mixedsurf.core.schemas import parse_int_range
from mixedsurf.pipeline import frontier

from ..common import console, exit_on_error


def baskets(
    pg: int = typer.Option(..., "--pg", help="Geometric genus p_g"),
    q: int = typer.Option(..., "--q", help="Irregularity q"),
    k2: str = typer.Option(..., "--k2", help="K^2 value or range"),
    max_order: Optional[int] = typer.Option(None, "--max-order", help="Mark branches with |G| above this"),
    branches: bool = typer.Option(True, "--branches/--no-branches", help="List each basket's signatures"),
):
    """List the baskets and signature branches a classify run would visit."""
    cap = max_order or get_settings().max_group_order
    with exit_on_error():
        try:
            k2_values = parse_int_range(k2)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        entries = list(frontier(pg, q, k2_values))

    table = Table(title=f"Search frontier for p_g={pg}, q={q}")
    table.add_column("K2", justify="right")
    table.add_column("Basket")
    table.add_column("B", justify="right")
    if branches:
        table.add_column("Signature")
        table.add_column("Theta", justify="right")
        table.add_column("beta", justify="right")
        table.add_column("|G0|", justify="right")
        table.add_column("g(C)", justify="right")
        table.add_column("", style="yellow")
    total = 0
    for entry in entries:
        if not branches:
            table.add_row(str(entry.k2), entry.basket.text, str(entry.basket.B))
            continue
        if not entry.branches:
            table.add_row(str(entry.k2), entry.basket.text, str(entry.basket.B), "[dim]none[/dim]")
        for branch in entry.branches:
            total += 1
            table.add_row(
                str(entry.k2),
                entry.basket.text,
                str(entry.basket.B),
                branch.signature,
                str(branch.theta),
                str(branch.beta),
                str(branch.order_g0),
                str(branch.genus),
                "above cap" if branch.order_g > cap else "",
            )
    console.print(table)
    console.print(f"{len(entries)} baskets, {total} branches")
