"""Pydantic schemas for files and records exchanged by the CLI."""
from __future__ import annotations

import re
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from mixedsurf.config import GROUP_ORDER_CAP, OutputFormat

# Catalogue file


class CatalogueMeta(BaseModel):
    """Free-form provenance plus optional expected class counts per order."""

    provenance: str = ""
    counts: Dict[int, int] = Field(default_factory=dict)


class CatalogueGroupEntry(BaseModel):
    """One group given by permutation generators on {1..degree}."""

    order: int = Field(ge=1)
    label: str
    degree: int = Field(ge=1)
    generators: List[List[int]] = Field(default_factory=list)


class CatalogueDocument(BaseModel):
    """The catalogue JSON document."""

    meta: CatalogueMeta = Field(default_factory=CatalogueMeta)
    complete_orders: List[int] = Field(default_factory=list)
    groups: List[CatalogueGroupEntry] = Field(default_factory=list)


# Analyze input

Element = Union[int, List[int]]


class GroupSpec(BaseModel):
    degree: int = Field(ge=1)
    generators: List[List[int]]


class VectorSpec(BaseModel):
    genus_part: List[Element] = Field(default_factory=list)
    tail: List[Element] = Field(default_factory=list)


class AnalyzeInput(BaseModel):
    """Explicit data of one candidate.

    Elements are 0-based indices into the breadth-first numbering of G built from
    ``G.generators``, or 1-based permutation image lists.
    """

    model_config = ConfigDict(populate_by_name=True)

    group: GroupSpec = Field(alias="G")
    g0_generators: List[Element] = Field(alias="G0_generators")
    tau_prime: Element
    vector: VectorSpec
    signature: List[int]

    @field_validator("signature")
    @classmethod
    def check_signature(cls, v: List[int]) -> List[int]:
        if not v or v[0] < 0 or any(m < 2 for m in v[1:]):
            raise ValueError("signature is [q, m1, ..., mr] with q >= 0 and every m_i >= 2")
        return v

    @model_validator(mode="after")
    def check_vector_shape(self) -> "AnalyzeInput":
        q = self.signature[0]
        if len(self.vector.genus_part) != 2 * q:
            raise ValueError(f"genus part must have {2 * q} entries")
        if len(self.vector.tail) != len(self.signature) - 1:
            raise ValueError("tail length must match the signature")
        return self


# Records


class Minimality(str, Enum):
    MINIMAL = "Minimal"
    UNKNOWN = "Unknown"


class SkipReason(str, Enum):
    ORDER_NOT_COVERED = "OrderNotCovered"
    ORDER_ABOVE_CAP = "OrderAboveCap"


class FamilyRecordModel(BaseModel):
    """One classified family, as written to JSON and stored in the run store."""

    k2: int
    pg: int
    q: int
    basket: str
    signature: str
    ord_g0: int
    g0: str
    ord_g: int
    g: str
    g_c: int
    g_alb: Optional[int] = None
    minimal: Minimality
    n_orbits: int = 1
    e: int
    chi: int
    d: int
    beta: int
    pg_t: int
    orbit_size: int
    image_order: Optional[int] = None
    m_union: Optional[int] = None
    extension_certificate: str = ""
    representative: Optional[AnalyzeInput] = None

    model_config = ConfigDict(populate_by_name=True)


class SkipEntryModel(BaseModel):
    """A search branch the run could not decide."""

    k2: int
    basket: str
    signature: str
    ord_g0: int
    reason: SkipReason


# Search configuration

_RANGE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$")


def parse_int_range(text: Union[str, int]) -> List[int]:
    """Parse ``"3"`` or ``"1..8"`` into the listed integers."""
    if isinstance(text, int):
        return [text]
    match = _RANGE.match(text)
    if not match:
        raise ValueError(f"expected INT or INT..INT, got {text!r}")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if hi < lo:
        raise ValueError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


class SearchConfig(BaseModel):
    """Everything one classify run depends on."""

    pg: int = Field(ge=0)
    q: int = Field(ge=0)
    k2_values: List[int]
    catalogue: Optional[Path] = None
    max_order: int = Field(default=GROUP_ORDER_CAP, ge=1, le=GROUP_ORDER_CAP)
    jobs: int = Field(default=1, ge=1)
    output_format: OutputFormat = OutputFormat.TSV
    oracle_check: bool = False
    oracle_cap: int = Field(default=20_000, ge=1)

    @field_validator("k2_values", mode="before")
    @classmethod
    def expand_range(cls, v: object) -> object:
        if isinstance(v, (str, int)):
            return parse_int_range(v)
        return v

    @field_validator("k2_values")
    @classmethod
    def nonempty(cls, v: List[int]) -> List[int]:
        if not v:
            raise ValueError("K^2 range is empty")
        return sorted(set(v))
