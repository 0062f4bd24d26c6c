"""The classification run: frontier, sharding, per-shard analysis and merge.

A shard is one (K^2, basket, signature, G0) combination. Shards are pure, so they run in
a process pool and are merged by a canonical sort, which makes the output independent of
the number of workers.
"""
from __future__ import annotations

import logging
import multiprocessing
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Optional

from mixedsurf.config import get_settings
from mixedsurf.core.schemas import FamilyRecordModel, SearchConfig, SkipEntryModel, SkipReason
from mixedsurf.covers import enumerate_generating_vectors, hurwitz_reduce
from mixedsurf.extensions import MixedExtension, enumerate_unsplit_extensions
from mixedsurf.groups import Catalogue, FiniteGroup, resolve_catalogue
from mixedsurf.search import SearchBranch, enumerate_baskets, enumerate_signatures, target_B
from mixedsurf.singularities import Basket
from mixedsurf.surfaces import MixedData, analyze_candidate

from .analyze import family_record

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[int], None]


@dataclass(frozen=True)
class FrontierEntry:
    """A basket for one K^2 value with the signatures it allows."""

    k2: int
    basket: Basket
    branches: tuple[SearchBranch, ...]


@dataclass(frozen=True)
class Shard:
    branch: SearchBranch
    g0_order: int
    g0_position: int
    g0_label: str


@dataclass
class SearchResult:
    records: list[FamilyRecordModel] = field(default_factory=list)
    skips: list[SkipEntryModel] = field(default_factory=list)
    shards: int = 0


def frontier(pg: int, q: int, k2_values: list[int]) -> Iterator[FrontierEntry]:
    """Every basket and branch the run would visit, without touching groups."""
    for k2 in k2_values:
        for basket in enumerate_baskets(target_B(pg, q, k2), pg):
            yield FrontierEntry(k2, basket, tuple(enumerate_signatures(basket, pg, q, k2)))


def _skip(branch: SearchBranch, reason: SkipReason) -> SkipEntryModel:
    return SkipEntryModel(
        k2=branch.k2,
        basket=branch.basket.text,
        signature=branch.signature,
        ord_g0=branch.order_g0,
        reason=reason,
    )


def _has_orders(entry_group: FiniteGroup, orders: tuple[int, ...]) -> bool:
    present = set(entry_group.element_orders)
    return all(m in present for m in orders)


def plan_search(config: SearchConfig, catalogue: Catalogue) -> tuple[list[Shard], list[SkipEntryModel]]:
    """The deterministic shard list and the branches that have to be skipped."""
    shards: list[Shard] = []
    skips: list[SkipEntryModel] = []
    for entry in frontier(config.pg, config.q, config.k2_values):
        for branch in entry.branches:
            n = branch.order_g0
            if branch.order_g > config.max_order:
                skips.append(_skip(branch, SkipReason.ORDER_ABOVE_CAP))
                continue
            groups, complete = catalogue.groups_of_order(n)
            if not complete or not catalogue.is_complete(2 * n):
                skips.append(_skip(branch, SkipReason.ORDER_NOT_COVERED))
                continue
            for position, group_entry in enumerate(groups):
                if _has_orders(group_entry.group, branch.orders):
                    shards.append(Shard(branch, n, position, group_entry.label))
    for skip in skips:
        logger.warning(
            "skipping K^2=%d basket %s signature (%s), |G0| = %d: %s",
            skip.k2, skip.basket, skip.signature, skip.ord_g0, skip.reason.value,
        )
    logger.info("%d shards, %d skipped branches", len(shards), len(skips))
    return shards, skips


# Worker state, installed once per process
_CATALOGUE: Optional[Catalogue] = None
_ORACLE: tuple[bool, Optional[int]] = (False, None)


def _init_worker(catalogue: Catalogue, oracle_check: bool, oracle_cap: Optional[int]) -> None:
    global _CATALOGUE, _ORACLE
    _CATALOGUE = catalogue
    _ORACLE = (oracle_check, oracle_cap)
    _extensions.cache_clear()


@lru_cache(maxsize=None)
def _extensions(order: int, position: int) -> tuple[MixedExtension, ...]:
    assert _CATALOGUE is not None
    g0 = _CATALOGUE.groups_of_order(order)[0][position].group
    return tuple(enumerate_unsplit_extensions(g0, _CATALOGUE))


def run_shard(shard: Shard) -> list[FamilyRecordModel]:
    """Every family of one shard whose basket and invariants hit the target."""
    assert _CATALOGUE is not None
    branch = shard.branch
    g0 = _CATALOGUE.groups_of_order(shard.g0_order)[0][shard.g0_position].group
    vectors = enumerate_generating_vectors(g0, branch.q, branch.orders)
    if not vectors:
        return []
    extensions = _extensions(shard.g0_order, shard.g0_position)
    oracle_check, oracle_cap = _ORACLE
    records = []
    for ext in extensions:
        for orbit in hurwitz_reduce(vectors, ext):
            data = MixedData(orbit.representative, ext)
            analysis = analyze_candidate(data, oracle_check=oracle_check, oracle_cap=oracle_cap)
            inv = analysis.invariants
            if analysis.basket != branch.basket or (inv.k2, inv.pg, inv.q) != (branch.k2, branch.pg, branch.q):
                continue
            records.append(family_record(analysis, shard.g0_label, ext.label, orbit_size=orbit.size))
    logger.debug(
        "%s (%s) on %s: %d families", branch.basket.text, branch.signature, shard.g0_label, len(records)
    )
    return records


def _record_key(record: FamilyRecordModel) -> tuple[object, ...]:
    return (record.k2, record.basket, record.signature, record.g0, record.g)


def merge_records(batches: list[list[FamilyRecordModel]]) -> list[FamilyRecordModel]:
    """Canonical order, duplicates dropped, n_orbits filled per table row."""
    unique: dict[str, FamilyRecordModel] = {}
    for batch in batches:
        for record in batch:
            unique.setdefault(record.model_dump_json(), record)
    records = sorted(
        unique.values(),
        key=lambda r: (*_record_key(r), r.extension_certificate, r.model_dump_json()),
    )
    counts: dict[tuple[object, ...], int] = {}
    for record in records:
        counts[_record_key(record)] = counts.get(_record_key(record), 0) + 1
    return [r.model_copy(update={"n_orbits": counts[_record_key(r)]}) for r in records]


def run_search(
    config: SearchConfig,
    catalogue: Optional[Catalogue] = None,
    progress: Optional[ProgressCallback] = None,
    on_plan: Optional[ProgressCallback] = None,
) -> SearchResult:
    """Classify all families with the configured (p_g, q, K^2) and report skips.

    ``on_plan`` receives the shard count once; ``progress`` is called after each shard.
    """
    if catalogue is None:
        settings = get_settings()
        catalogue = resolve_catalogue(
            config.catalogue,
            settings.catalogue_path,
            settings.catalogue_build_max_order,
            settings.automorphism_cap,
        )
    shards, skips = plan_search(config, catalogue)
    if on_plan:
        on_plan(len(shards))
    batches: list[list[FamilyRecordModel]] = []
    if config.jobs <= 1 or len(shards) <= 1:
        _init_worker(catalogue, config.oracle_check, config.oracle_cap)
        for shard in shards:
            batches.append(run_shard(shard))
            if progress:
                progress(1)
    else:
        with multiprocessing.Pool(
            processes=config.jobs,
            initializer=_init_worker,
            initargs=(catalogue, config.oracle_check, config.oracle_cap),
        ) as pool:
            for batch in pool.imap(run_shard, shards):
                batches.append(batch)
                if progress:
                    progress(1)
    records = merge_records(batches)
    logger.info("%d families, %d skipped branches", len(records), len(skips))
    return SearchResult(records, skips, len(shards))


__all__ = [
    "FrontierEntry",
    "SearchResult",
    "Shard",
    "frontier",
    "merge_records",
    "plan_search",
    "run_search",
    "run_shard",
]
