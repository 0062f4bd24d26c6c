"""Orchestration: classification runs, single-candidate analysis and output."""
from __future__ import annotations

from .analyze import (
    analyze,
    analyze_file,
    family_record,
    load_analyze_input,
    mixed_data_from_input,
    representative_input,
)
from .config import build_search_config
from .emit import (
    SKIP_COLUMNS,
    TSV_COLUMNS,
    emit,
    records_json,
    records_tsv,
    render_records,
    render_skips,
    skips_tsv,
)
from .search import FrontierEntry, SearchResult, frontier, merge_records, plan_search, run_search

__all__ = [
    "SKIP_COLUMNS",
    "TSV_COLUMNS",
    "FrontierEntry",
    "SearchResult",
    "analyze",
    "analyze_file",
    "build_search_config",
    "emit",
    "family_record",
    "frontier",
    "load_analyze_input",
    "merge_records",
    "mixed_data_from_input",
    "plan_search",
    "records_json",
    "records_tsv",
    "render_records",
    "render_skips",
    "representative_input",
    "run_search",
    "skips_tsv",
]
