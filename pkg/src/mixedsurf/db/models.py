"""SQLAlchemy models for the mixedsurf run store."""
from __future__ import annotations

from datetime import datetime
from typing import Optional

from sqlalchemy import (
    JSON,
    DateTime,
    Float,
    ForeignKey,
    Integer,
    String,
    Text,
    func,
)
from sqlalchemy.orm import DeclarativeBase, Mapped, mapped_column, relationship


class Base(DeclarativeBase):
    """Base class for all models."""

    pass


class SearchRun(Base):
    """One classify run and its configuration."""

    __tablename__ = "search_runs"

    id: Mapped[int] = mapped_column(Integer, primary_key=True, autoincrement=True)
    created_at: Mapped[datetime] = mapped_column(DateTime, default=func.now(), nullable=False)
    pg: Mapped[int] = mapped_column(Integer, nullable=False)
    q: Mapped[int] = mapped_column(Integer, nullable=False)
    k2_min: Mapped[int] = mapped_column(Integer, nullable=False)
    k2_max: Mapped[int] = mapped_column(Integer, nullable=False)
    catalogue: Mapped[Optional[str]] = mapped_column(String(1024), nullable=True)
    max_order: Mapped[int] = mapped_column(Integer, nullable=False)
    jobs: Mapped[int] = mapped_column(Integer, default=1, nullable=False)
    n_families: Mapped[int] = mapped_column(Integer, default=0, nullable=False)
    n_skipped: Mapped[int] = mapped_column(Integer, default=0, nullable=False)
    elapsed_seconds: Mapped[float] = mapped_column(Float, default=0.0, nullable=False)

    families: Mapped[list["FamilyRow"]] = relationship(
        "FamilyRow", back_populates="run", cascade="all, delete-orphan", order_by="FamilyRow.position"
    )
    skips: Mapped[list["SkipRow"]] = relationship(
        "SkipRow", back_populates="run", cascade="all, delete-orphan", order_by="SkipRow.position"
    )

    def __repr__(self) -> str:
        return f"<SearchRun(id={self.id}, pg={self.pg}, q={self.q}, K2={self.k2_min}..{self.k2_max})>"


class FamilyRow(Base):
    """A family found by a run; ``payload`` holds the full record."""

    __tablename__ = "families"

    id: Mapped[int] = mapped_column(Integer, primary_key=True, autoincrement=True)
    run_id: Mapped[int] = mapped_column(
        Integer, ForeignKey("search_runs.id", ondelete="CASCADE"), nullable=False, index=True
    )
    position: Mapped[int] = mapped_column(Integer, nullable=False)
    k2: Mapped[int] = mapped_column(Integer, nullable=False)
    basket: Mapped[str] = mapped_column(Text, nullable=False)
    signature: Mapped[str] = mapped_column(String(256), nullable=False)
    g0: Mapped[str] = mapped_column(String(128), nullable=False)
    g: Mapped[str] = mapped_column(String(128), nullable=False)
    payload: Mapped[dict] = mapped_column(JSON, nullable=False)

    run: Mapped["SearchRun"] = relationship("SearchRun", back_populates="families")

    def __repr__(self) -> str:
        return f"<FamilyRow(run={self.run_id}, K2={self.k2}, G0='{self.g0}')>"


class SkipRow(Base):
    """A branch a run could not decide."""

    __tablename__ = "skips"

    id: Mapped[int] = mapped_column(Integer, primary_key=True, autoincrement=True)
    run_id: Mapped[int] = mapped_column(
        Integer, ForeignKey("search_runs.id", ondelete="CASCADE"), nullable=False, index=True
    )
    position: Mapped[int] = mapped_column(Integer, nullable=False)
    k2: Mapped[int] = mapped_column(Integer, nullable=False)
    basket: Mapped[str] = mapped_column(Text, nullable=False)
    signature: Mapped[str] = mapped_column(String(256), nullable=False)
    ord_g0: Mapped[int] = mapped_column(Integer, nullable=False)
    reason: Mapped[str] = mapped_column(String(32), nullable=False)

    run: Mapped["SearchRun"] = relationship("SearchRun", back_populates="skips")

    def __repr__(self) -> str:
        return f"<SkipRow(run={self.run_id}, |G0|={self.ord_g0}, reason='{self.reason}')>"
