"""Run store for mixedsurf."""
from __future__ import annotations

from .models import Base, FamilyRow, SearchRun, SkipRow
from .repository import Repository
from .session import get_engine, get_session, init_db

__all__ = [
    "Base",
    "FamilyRow",
    "SearchRun",
    "SkipRow",
    "Repository",
    "get_engine",
    "get_session",
    "init_db",
]
