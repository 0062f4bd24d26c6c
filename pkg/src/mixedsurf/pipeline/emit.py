"""TSV and JSON renderings of family tables and skip reports."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Sequence

from mixedsurf.config import OutputFormat
from mixedsurf.core.schemas import FamilyRecordModel, SkipEntryModel

TSV_COLUMNS = (
    "K2", "pg", "q", "basket", "signature", "ordG0", "G0", "ordG", "G", "gC", "g_alb",
    "minimal", "n_orbits",
)
SKIP_COLUMNS = ("K2", "basket", "signature", "ordG0", "reason")


def record_row(record: FamilyRecordModel) -> list[str]:
    values = (
        record.k2, record.pg, record.q, record.basket, record.signature, record.ord_g0,
        record.g0, record.ord_g, record.g, record.g_c,
        "-" if record.g_alb is None else record.g_alb,
        record.minimal.value, record.n_orbits,
    )
    return [str(v) for v in values]


def skip_row(skip: SkipEntryModel) -> list[str]:
    return [str(skip.k2), skip.basket, skip.signature, str(skip.ord_g0), skip.reason.value]


def _tsv(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    return "".join("\t".join(row) + "\n" for row in [list(header), *rows])


def records_tsv(records: Sequence[FamilyRecordModel]) -> str:
    return _tsv(TSV_COLUMNS, [record_row(r) for r in records])


def records_json(records: Sequence[FamilyRecordModel]) -> str:
    return json.dumps([r.model_dump(mode="json", by_alias=True) for r in records], indent=2) + "\n"


def skips_tsv(skips: Sequence[SkipEntryModel]) -> str:
    return _tsv(SKIP_COLUMNS, [skip_row(s) for s in skips])


def skips_json(skips: Sequence[SkipEntryModel]) -> str:
    return json.dumps([s.model_dump(mode="json") for s in skips], indent=2) + "\n"


def render_records(records: Sequence[FamilyRecordModel], fmt: OutputFormat) -> str:
    return records_json(records) if fmt is OutputFormat.JSON else records_tsv(records)


def render_skips(skips: Sequence[SkipEntryModel], fmt: OutputFormat) -> str:
    return skips_json(skips) if fmt is OutputFormat.JSON else skips_tsv(skips)


def emit(
    records: Sequence[FamilyRecordModel],
    skips: Sequence[SkipEntryModel],
    fmt: OutputFormat,
    out: Optional[Path] = None,
    skip_report: Optional[Path] = None,
) -> str:
    """Write the table to ``out`` and the skips to ``skip_report``; return the table text."""
    text = render_records(records, fmt)
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)
    if skip_report is not None:
        skip_report.parent.mkdir(parents=True, exist_ok=True)
        skip_report.write_text(render_skips(skips, fmt))
    return text
