"""SQLite engine and sessions for the run store."""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Any

from sqlalchemy import create_engine, event
from sqlalchemy.engine import Engine
from sqlalchemy.orm import Session, sessionmaker

from mixedsurf.config import get_settings

from .models import Base

logger = logging.getLogger(__name__)


def _enforce_foreign_keys(dbapi_connection: Any, _record: Any) -> None:
    # SQLite ignores ON DELETE CASCADE unless asked per connection
    cursor = dbapi_connection.cursor()
    cursor.execute("PRAGMA foreign_keys=ON")
    cursor.close()


@lru_cache
def get_engine() -> Engine:
    """Engine for the run store under the configured home directory."""
    settings = get_settings()
    settings.ensure_directories()
    engine = create_engine(f"sqlite:///{settings.db_path}", echo=False)
    event.listen(engine, "connect", _enforce_foreign_keys)
    logger.debug("run store at %s", settings.db_path)
    return engine


@lru_cache
def _session_factory(engine: Engine) -> sessionmaker[Session]:
    return sessionmaker(bind=engine)


def get_session() -> Session:
    return _session_factory(get_engine())()


def init_db() -> None:
    """Create the run, family and skip tables when missing."""
    Base.metadata.create_all(get_engine())
