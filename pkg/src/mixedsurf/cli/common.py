"""Shared console and error mapping for CLI commands."""
from __future__ import annotations

from contextlib import contextmanager
from typing import Iterator

import typer
from rich.console import Console
from rich.markup import escape

from mixedsurf.core.errors import MixedSurfError

console = Console()
err_console = Console(stderr=True)


@contextmanager
def exit_on_error() -> Iterator[None]:
    """Turn a MixedSurfError into a red message and its exit code."""
    try:
        yield
    except MixedSurfError as exc:
        err_console.print(f"[red]{type(exc).__name__}:[/red] {escape(str(exc))}", highlight=False)
        raise typer.Exit(exc.exit_code) from exc
