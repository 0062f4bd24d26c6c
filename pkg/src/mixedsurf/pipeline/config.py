"""Search configuration assembled from command-line options and settings."""
from __future__ import annotations

from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from mixedsurf.config import OutputFormat, Settings, get_settings
from mixedsurf.core.errors import InputError
from mixedsurf.core.schemas import SearchConfig


def build_search_config(
    pg: int,
    q: int,
    k2: str,
    catalogue: Optional[Path] = None,
    max_order: Optional[int] = None,
    jobs: Optional[int] = None,
    output_format: Optional[OutputFormat] = None,
    oracle_check: bool = False,
    settings: Optional[Settings] = None,
) -> SearchConfig:
    """Fill unset options from the settings; invalid values raise InputError."""
    settings = settings or get_settings()
    try:
        return SearchConfig(
            pg=pg,
            q=q,
            k2_values=k2,
            catalogue=catalogue,
            max_order=max_order if max_order is not None else settings.max_group_order,
            jobs=jobs if jobs is not None else settings.jobs,
            output_format=output_format or settings.output_format,
            oracle_check=oracle_check,
            oracle_cap=settings.oracle_cap,
        )
    except ValidationError as exc:
        error = exc.errors()[0]
        where = ".".join(str(p) for p in error["loc"])
        raise InputError(f"{where}: {error['msg']}") from exc
