"""Tests for database models and repository."""

from sqlalchemy import delete

from mixedsurf.core.schemas import SkipEntryModel, SkipReason
from mixedsurf.db import FamilyRow, SearchRun, SkipRow
from mixedsurf.pipeline import build_search_config, family_record
from mixedsurf.surfaces import analyze_candidate


def _records(*datas):
    return [family_record(analyze_candidate(d), "Z2", "Z4") for d in datas]


def _skip(k2=2):
    return SkipEntryModel(
        k2=k2, basket="C(2,1);2xD(2,1)", signature="1;2", ord_g0=8,
        reason=SkipReason.ORDER_ABOVE_CAP,
    )


class TestRunOperations:
    """Test run CRUD operations."""

    def test_add_run(self, repo, k2_two_data):
        """Test adding a run."""
        config = build_search_config(1, 1, "2..3", max_order=8)
        run = repo.add_run(config, _records(k2_two_data), [_skip()], elapsed=1.5)

        assert run.id is not None
        assert (run.pg, run.q, run.k2_min, run.k2_max) == (1, 1, 2, 3)
        assert run.max_order == 8
        assert run.n_families == 1
        assert run.n_skipped == 1
        assert run.elapsed_seconds == 1.5
        assert run.created_at is not None

    def test_get_run(self, repo):
        """Test retrieving a run."""
        run = repo.add_run(build_search_config(0, 0, "1"), [], [])

        retrieved = repo.get_run(run.id)
        assert retrieved is not None
        assert retrieved.k2_min == 1
        assert repo.get_run(run.id + 100) is None

    def test_list_runs(self, repo):
        """Test listing runs, newest first."""
        first = repo.add_run(build_search_config(0, 0, "1"), [], [])
        second = repo.add_run(build_search_config(0, 0, "2"), [], [])

        runs = repo.list_runs()
        assert [r.id for r in runs] == [second.id, first.id]
        assert len(repo.list_runs(limit=1)) == 1

    def test_families_round_trip(self, repo, k2_two_data, k2_eight_data):
        """Stored records come back unchanged and in order."""
        records = _records(k2_two_data, k2_eight_data)
        run = repo.add_run(build_search_config(1, 1, "2"), records, [])

        loaded = repo.get_families(run.id)
        assert loaded == records
        assert loaded[0].representative == records[0].representative

    def test_skips_round_trip(self, repo):
        """Stored skips come back with their reason."""
        skips = [_skip(2), _skip(3)]
        run = repo.add_run(build_search_config(1, 1, "2..3"), [], skips)

        assert repo.get_skips(run.id) == skips

    def test_delete_run(self, repo, k2_two_data):
        """Test deleting a run with its rows."""
        run = repo.add_run(build_search_config(1, 1, "2"), _records(k2_two_data), [_skip()])

        assert repo.delete_run(run.id)
        assert repo.get_run(run.id) is None
        assert repo.session.query(FamilyRow).count() == 0
        assert repo.session.query(SkipRow).count() == 0
        assert not repo.delete_run(run.id)

    def test_database_cascade(self, repo, k2_two_data):
        """A bulk delete of a run removes its rows through the foreign keys."""
        run = repo.add_run(build_search_config(1, 1, "2"), _records(k2_two_data), [_skip()])
        repo.session.execute(delete(SearchRun).where(SearchRun.id == run.id))
        repo.commit()

        assert repo.session.query(FamilyRow).count() == 0
        assert repo.session.query(SkipRow).count() == 0

    def test_runs_are_isolated(self, repo):
        """Each test starts with an empty run store."""
        assert repo.session.query(SearchRun).count() == 0
