"""Core module for mixedsurf: errors, schemas and logging setup."""
from __future__ import annotations

from .errors import (
    CatalogueError,
    InternalConsistencyError,
    MixedSurfError,
    ValidationFailure,
)
from .schemas import (
    AnalyzeInput,
    CatalogueDocument,
    CatalogueGroupEntry,
    CatalogueMeta,
    FamilyRecordModel,
    Minimality,
    SearchConfig,
    SkipEntryModel,
    SkipReason,
    parse_int_range,
)

__all__ = [
    "MixedSurfError",
    "ValidationFailure",
    "CatalogueError",
    "InternalConsistencyError",
    "AnalyzeInput",
    "CatalogueDocument",
    "CatalogueGroupEntry",
    "CatalogueMeta",
    "FamilyRecordModel",
    "Minimality",
    "SearchConfig",
    "SkipEntryModel",
    "SkipReason",
    "parse_int_range",
]
