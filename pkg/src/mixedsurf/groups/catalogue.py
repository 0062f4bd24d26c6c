"""Catalogue of all groups of given orders, stored as permutation generators."""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Union

from pydantic import ValidationError

from mixedsurf.core.errors import (
    CatalogueValidationError,
    InvalidPermutation,
    OrderCapExceeded,
    ParseError,
)
from mixedsurf.core.schemas import CatalogueDocument, CatalogueGroupEntry, CatalogueMeta

from .core import FiniteGroup, build_group, permutation_generators, validate_group
from .isomorphism import fingerprint, find_isomorphism

logger = logging.getLogger(__name__)

PACKAGED_CATALOGUE = "catalogue_small.json"


@dataclass
class CatalogueEntry:
    """A catalogue group and its label."""

    label: str
    group: FiniteGroup

    @property
    def order(self) -> int:
        return self.group.order


@dataclass
class Catalogue:
    """Groups keyed by order, with the orders declared complete."""

    entries: dict[int, list[CatalogueEntry]] = field(default_factory=dict)
    complete_orders: set[int] = field(default_factory=set)
    provenance: str = ""
    counts: dict[int, int] = field(default_factory=dict)
    source: Optional[Path] = None

    def groups_of_order(self, n: int) -> tuple[list[CatalogueEntry], bool]:
        """The stored groups of order n and whether that list is complete."""
        return list(self.entries.get(n, [])), n in self.complete_orders

    def is_complete(self, n: int) -> bool:
        return n in self.complete_orders

    @property
    def orders(self) -> list[int]:
        return sorted(self.entries)

    def __len__(self) -> int:
        return sum(len(v) for v in self.entries.values())

    def add(self, label: str, group: FiniteGroup) -> CatalogueEntry:
        """Add a group, rejecting duplicates of an existing class."""
        existing = self.find(group)
        if existing is not None:
            raise CatalogueValidationError(
                f"{label} duplicates {existing.label} (order {group.order})"
            )
        group.label = label
        entry = CatalogueEntry(label, group)
        self.entries.setdefault(group.order, []).append(entry)
        return entry

    def find(self, group: FiniteGroup) -> Optional[CatalogueEntry]:
        """The catalogue entry isomorphic to ``group``, if any."""
        fp = fingerprint(group)
        for entry in self.entries.get(group.order, []):
            if fingerprint(entry.group) == fp and find_isomorphism(group, entry.group):
                return entry
        return None

    def label_of(self, group: FiniteGroup) -> str:
        entry = self.find(group)
        return entry.label if entry is not None else group.label or f"order {group.order}"

    def restricted(self, orders: Iterable[int]) -> "Catalogue":
        """A copy keeping only the given orders."""
        keep = set(orders)
        return Catalogue(
            entries={n: list(v) for n, v in self.entries.items() if n in keep},
            complete_orders=self.complete_orders & keep,
            provenance=self.provenance,
            counts={n: c for n, c in self.counts.items() if n in keep},
            source=self.source,
        )


def groups_of_order(cat: Catalogue, n: int) -> tuple[list[CatalogueEntry], bool]:
    return cat.groups_of_order(n)


def _read_document(path: Union[Path, str]) -> CatalogueDocument:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read catalogue {path}: {exc}") from exc
    try:
        return CatalogueDocument.model_validate_json(text)
    except ValidationError as exc:
        raise ParseError(f"{path}: {exc.error_count()} schema errors: {exc.errors()[0]['msg']}") from exc


def catalogue_from_document(doc: CatalogueDocument, source: Optional[Path] = None) -> Catalogue:
    """Rebuild and validate every group of a parsed catalogue document."""
    cat = Catalogue(
        complete_orders=set(doc.complete_orders),
        provenance=doc.meta.provenance,
        counts=dict(doc.meta.counts),
        source=source,
    )
    for item in doc.groups:
        if any(len(g) != item.degree for g in item.generators):
            raise ParseError(f"{item.label}: generator length differs from degree {item.degree}")
        try:
            group = build_group(item.generators, item.label)
        except (InvalidPermutation, OrderCapExceeded) as exc:
            raise CatalogueValidationError(f"{item.label}: {exc}") from exc
        if group.order != item.order:
            raise CatalogueValidationError(
                f"{item.label}: generators give order {group.order}, entry says {item.order}"
            )
        problems = validate_group(group)
        if problems:
            raise CatalogueValidationError(f"{item.label}: {'; '.join(problems)}")
        cat.add(item.label, group)
    for n in sorted(cat.complete_orders):
        expected = cat.counts.get(n)
        found = len(cat.entries.get(n, []))
        if expected is not None and expected != found:
            raise CatalogueValidationError(
                f"order {n} declared complete with {found} groups, expected {expected}"
            )
    logger.info(
        "loaded %d groups over %d orders (%d complete)",
        len(cat), len(cat.entries), len(cat.complete_orders),
    )
    return cat


def load_catalogue(path: Union[Path, str]) -> Catalogue:
    """Load and validate a catalogue file."""
    return catalogue_from_document(_read_document(path), source=Path(path))


def load_packaged_catalogue() -> Catalogue:
    """The catalogue shipped inside the package."""
    data = resources.files("mixedsurf.data").joinpath(PACKAGED_CATALOGUE)
    with resources.as_file(data) as path:
        return load_catalogue(path)


def resolve_catalogue(
    path: Optional[Path],
    settings_path: Optional[Path] = None,
    build_max_order: Optional[int] = None,
    automorphism_cap: Optional[int] = None,
) -> Catalogue:
    """Explicit path, else the user catalogue, else a freshly built one, else the packaged one.

    With ``build_max_order`` a missing user catalogue is built up to that order and saved
    at ``settings_path``, so later runs load it.
    """
    if path is not None:
        return load_catalogue(path)
    if settings_path is not None and settings_path.exists():
        return load_catalogue(settings_path)
    if settings_path is not None and build_max_order:
        from .builder import build_catalogue

        logger.warning(
            "no catalogue at %s; building orders 1..%d once", settings_path, build_max_order
        )
        cat = build_catalogue(build_max_order, automorphism_cap)
        save_catalogue(cat, settings_path)
        cat.source = settings_path
        return cat
    return load_packaged_catalogue()


def catalogue_document(cat: Catalogue) -> CatalogueDocument:
    """Canonical document: groups sorted by (order, label)."""
    groups = []
    for n in cat.orders:
        for entry in sorted(cat.entries[n], key=lambda e: e.label):
            gens = permutation_generators(entry.group)
            degree = len(gens[0]) if gens else 1
            groups.append(
                CatalogueGroupEntry(order=n, label=entry.label, degree=degree, generators=gens)
            )
    return CatalogueDocument(
        meta=CatalogueMeta(provenance=cat.provenance, counts=dict(sorted(cat.counts.items()))),
        complete_orders=sorted(cat.complete_orders),
        groups=groups,
    )


def save_catalogue(cat: Catalogue, path: Union[Path, str]) -> None:
    """Write the canonical serialization."""
    doc = catalogue_document(cat)
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        json.dump(doc.model_dump(mode="json"), f, indent=1)
        f.write("\n")


def validate_catalogue(cat: Catalogue, oracle_max: int = 16) -> list[str]:
    """Cross-check complete orders up to ``oracle_max`` against brute-force enumeration."""
    from .enumerate import enumerate_small_groups

    problems = []
    for n in sorted(cat.complete_orders):
        if n > oracle_max:
            continue
        stored = [e.group for e in cat.entries.get(n, [])]
        reference = enumerate_small_groups(n)
        if len(stored) != len(reference):
            problems.append(f"order {n}: {len(stored)} groups, enumeration finds {len(reference)}")
            continue
        unmatched = list(reference)
        for group in stored:
            hit = next((r for r in unmatched if find_isomorphism(group, r)), None)
            if hit is None:
                problems.append(f"order {n}: {group.label} matches no enumerated group")
            else:
                unmatched.remove(hit)
    return problems
