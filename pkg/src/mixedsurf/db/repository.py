"""Repository pattern for the run store."""
from __future__ import annotations

from typing import Optional, Sequence

from sqlalchemy import select
from sqlalchemy.orm import Session

from mixedsurf.core.schemas import FamilyRecordModel, SearchConfig, SkipEntryModel

from .models import FamilyRow, SearchRun, SkipRow
from .session import get_session


class Repository:
    """Repository for all run store operations."""

    def __init__(self, session: Session | None = None):
        self._session = session

    @property
    def session(self) -> Session:
        """Get or create session."""
        if self._session is None:
            self._session = get_session()
        return self._session

    def commit(self) -> None:
        """Commit current transaction."""
        self.session.commit()

    def close(self) -> None:
        """Close session."""
        if self._session is not None:
            self._session.close()
            self._session = None

    # Runs
    def add_run(
        self,
        config: SearchConfig,
        records: Sequence[FamilyRecordModel],
        skips: Sequence[SkipEntryModel],
        elapsed: float = 0.0,
    ) -> SearchRun:
        """Store a finished run with its families and skips."""
        run = SearchRun(
            pg=config.pg,
            q=config.q,
            k2_min=min(config.k2_values),
            k2_max=max(config.k2_values),
            catalogue=str(config.catalogue) if config.catalogue else None,
            max_order=config.max_order,
            jobs=config.jobs,
            n_families=len(records),
            n_skipped=len(skips),
            elapsed_seconds=elapsed,
        )
        for position, record in enumerate(records):
            run.families.append(
                FamilyRow(
                    position=position,
                    k2=record.k2,
                    basket=record.basket,
                    signature=record.signature,
                    g0=record.g0,
                    g=record.g,
                    payload=record.model_dump(mode="json", by_alias=True),
                )
            )
        for position, skip in enumerate(skips):
            run.skips.append(
                SkipRow(
                    position=position,
                    k2=skip.k2,
                    basket=skip.basket,
                    signature=skip.signature,
                    ord_g0=skip.ord_g0,
                    reason=skip.reason.value,
                )
            )
        self.session.add(run)
        self.session.commit()
        return run

    def get_run(self, run_id: int) -> SearchRun | None:
        """Get run by ID."""
        return self.session.get(SearchRun, run_id)

    def list_runs(self, limit: Optional[int] = None) -> list[SearchRun]:
        """Runs, newest first."""
        stmt = select(SearchRun).order_by(SearchRun.id.desc())
        if limit:
            stmt = stmt.limit(limit)
        return list(self.session.execute(stmt).scalars().all())

    def get_families(self, run_id: int) -> list[FamilyRecordModel]:
        """The stored records of a run, in their original order."""
        stmt = select(FamilyRow).where(FamilyRow.run_id == run_id).order_by(FamilyRow.position)
        return [
            FamilyRecordModel.model_validate(row.payload)
            for row in self.session.execute(stmt).scalars()
        ]

    def get_skips(self, run_id: int) -> list[SkipEntryModel]:
        stmt = select(SkipRow).where(SkipRow.run_id == run_id).order_by(SkipRow.position)
        return [
            SkipEntryModel(
                k2=row.k2,
                basket=row.basket,
                signature=row.signature,
                ord_g0=row.ord_g0,
                reason=row.reason,
            )
            for row in self.session.execute(stmt).scalars()
        ]

    def delete_run(self, run_id: int) -> bool:
        """Delete a run with its families and skips."""
        run = self.get_run(run_id)
        if run is None:
            return False
        self.session.delete(run)
        self.session.commit()
        return True
