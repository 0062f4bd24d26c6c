"""Logging setup for the command line."""
from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

_VERBOSITY = {0: None, 1: logging.INFO}


def setup_logging(level: str = "WARNING", verbose: int = 0, console: Console | None = None) -> None:
    """Route the ``mixedsurf`` logger through rich at the requested level.

    ``verbose`` overrides ``level``: 1 means INFO, 2 or more DEBUG.
    """
    resolved = logging.DEBUG if verbose >= 2 else _VERBOSITY.get(verbose) or getattr(
        logging, level.upper(), logging.WARNING
    )
    handler = RichHandler(
        console=console or Console(stderr=True),
        show_path=False,
        rich_tracebacks=True,
        markup=False,
    )
    handler.setFormatter(logging.Formatter("%(message)s", datefmt="[%X]"))
    root = logging.getLogger("mixedsurf")
    for existing in list(root.handlers):
        if isinstance(existing, RichHandler):
            root.removeHandler(existing)
    root.addHandler(handler)
    root.setLevel(resolved)
