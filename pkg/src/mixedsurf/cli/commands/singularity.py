"""Inspect one singularity class."""
from __future__ import annotations

import typer
from rich.table import Table

from mixedsurf.singularities import Flavor, d_group_descriptor, parse_class, resolution_graph

from ..common import console, exit_on_error


def singularity(
    name: str = typer.Argument(..., help='Class such as "C(8,3)" or "D(4,3)"'),
):
    """Show the continued fraction, correction terms and resolution graph of a class."""
    with exit_on_error():
        cls = parse_class(name)
        graph = resolution_graph(cls)
        descriptor = d_group_descriptor(cls.n, cls.a) if cls.flavor is Flavor.D else None

    table = Table(title=str(cls), show_header=False)
    table.add_column("Field", style="cyan")
    table.add_column("Value")
    table.add_row("n/a", f"{cls.n}/{cls.a} = [{','.join(str(b) for b in cls.coefficients)}]")
    table.add_row("a'", str(cls.a_dual))
    table.add_row("k", str(cls.k))
    table.add_row("e", str(cls.e))
    table.add_row("B", str(cls.B))
    table.add_row("index", str(cls.index))
    table.add_row("graph", f"{graph.shape}: {' '.join(str(s) for s in graph.nodes)}")
    table.add_row("edges", " ".join(f"{a}-{b}" for a, b in graph.edges) or "-")
    if descriptor is not None:
        table.add_row("case", descriptor.case.value)
        table.add_row("p/q", f"{descriptor.p}/{descriptor.q}")
        table.add_row("b, xi", f"{descriptor.b}, {descriptor.xi}")
        if descriptor.rdp:
            table.add_row("RDP", descriptor.rdp)
        if descriptor.cyclic_equivalent:
            n, a = descriptor.cyclic_equivalent
            table.add_row("cyclic", f"C({n},{a})")
    console.print(table)
