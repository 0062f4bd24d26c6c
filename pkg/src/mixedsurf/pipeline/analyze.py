"""Single-candidate analysis from explicit group data, and record building."""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional, Union

from pydantic import ValidationError

from mixedsurf.config import get_settings
from mixedsurf.core.errors import InputError, NotGenerating
from mixedsurf.core.schemas import (
    AnalyzeInput,
    Element,
    FamilyRecordModel,
    GroupSpec,
    VectorSpec,
)
from mixedsurf.covers import GeneratingVector
from mixedsurf.extensions import MixedExtension, make_extension
from mixedsurf.groups import (
    Catalogue,
    FiniteGroup,
    build_group,
    generated_subgroup,
    name_group,
)
from mixedsurf.groups.core import permutation_generators
from mixedsurf.surfaces import CandidateAnalysis, MixedData, analyze_candidate

logger = logging.getLogger(__name__)


def element_permutation(group: FiniteGroup, x: int) -> list[int]:
    """The 1-based permutation of x, in the left-regular representation when the
    group carries no permutations."""
    if group.permutations is not None:
        return [i + 1 for i in group.permutations[x]]
    return [int(v) + 1 for v in group.table[x]]


def _resolve(group: FiniteGroup, element: Element, lookup: dict[tuple[int, ...], int]) -> int:
    if isinstance(element, int):
        if not 0 <= element < group.order:
            raise InputError(f"element index {element} outside a group of order {group.order}")
        return element
    key = tuple(i - 1 for i in element)
    if key not in lookup:
        raise InputError(f"permutation {element} is not an element of G")
    return lookup[key]


def load_analyze_input(path: Union[Path, str]) -> AnalyzeInput:
    """Read and validate an analyze input file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return AnalyzeInput.model_validate_json(text)
    except ValidationError as exc:
        raise InputError(f"{path}: {exc.errors()[0]['msg']}") from exc


def mixed_data_from_input(spec: AnalyzeInput) -> MixedData:
    """Build G, the embedded G0, tau' and the vector, then validate them together."""
    settings = get_settings()
    if any(len(g) != spec.group.degree for g in spec.group.generators):
        raise InputError(f"generators must all have degree {spec.group.degree}")
    group = build_group(spec.group.generators, cap=settings.max_group_order)
    lookup = {p: k for k, p in enumerate(group.permutations or ())}

    def resolve(element: Element) -> int:
        return _resolve(group, element, lookup)

    sub = generated_subgroup(group, [resolve(e) for e in spec.g0_generators])
    tau_prime = resolve(spec.tau_prime)
    if tau_prime in sub:
        raise InputError("tau' lies in G0")
    extension = make_extension(group, sub, tau_prime=tau_prime)
    q = spec.signature[0]

    def local(element: Element) -> int:
        x = resolve(element)
        if x not in sub:
            raise NotGenerating(f"vector entry {element} lies outside G0")
        return extension.from_g(x)

    vector = GeneratingVector(
        q,
        tuple(local(e) for e in spec.vector.genus_part),
        tuple(local(e) for e in spec.vector.tail),
        extension.g0,
    )
    if sorted(vector.orders) != sorted(spec.signature[1:]):
        raise NotGenerating(f"tail orders {list(vector.orders)} do not match the signature")
    return MixedData.build(vector, extension)


def representative_input(data: MixedData) -> AnalyzeInput:
    """The analyze input reproducing ``data``, with every element as a permutation."""
    ext: MixedExtension = data.extension
    group = ext.group
    generators = permutation_generators(group)

    def perm(h: int) -> list[int]:
        return element_permutation(group, ext.to_g(h))

    return AnalyzeInput(
        G=GroupSpec(degree=len(generators[0]) if generators else 1, generators=generators),
        G0_generators=[perm(h) for h in data.g0.generators],
        tau_prime=element_permutation(group, ext.tau_prime),
        vector=VectorSpec(
            genus_part=[perm(h) for h in data.vector.genus_part],
            tail=[perm(h) for h in data.vector.tail],
        ),
        signature=[data.q, *data.orders],
    )


def group_label(group: FiniteGroup, catalogue: Optional[Catalogue] = None) -> str:
    if catalogue is not None:
        entry = catalogue.find(group)
        if entry is not None:
            return entry.label
    return name_group(group) or group.label or f"G{group.order}"


def family_record(
    analysis: CandidateAnalysis,
    g0_label: str,
    g_label: str,
    orbit_size: int = 1,
    n_orbits: int = 1,
) -> FamilyRecordModel:
    data, inv, alb = analysis.data, analysis.invariants, analysis.albanese
    return FamilyRecordModel(
        k2=inv.k2,
        pg=inv.pg,
        q=inv.q,
        basket=analysis.basket.text,
        signature=data.signature,
        ord_g0=data.order_g0,
        g0=g0_label,
        ord_g=data.order_g,
        g=g_label,
        g_c=inv.genus,
        g_alb=alb.g_alb if alb else None,
        minimal=inv.minimal,
        n_orbits=n_orbits,
        e=inv.e,
        chi=inv.chi,
        d=inv.d,
        beta=inv.beta,
        pg_t=inv.pg_t,
        orbit_size=orbit_size,
        image_order=alb.image_order if alb else None,
        m_union=alb.m_union if alb else None,
        extension_certificate=data.extension.certificate,
        representative=representative_input(data),
    )


def analyze(
    spec: AnalyzeInput,
    catalogue: Optional[Catalogue] = None,
    oracle_check: bool = False,
    oracle_cap: Optional[int] = None,
) -> FamilyRecordModel:
    """Full analysis of one explicitly given candidate."""
    data = mixed_data_from_input(spec)
    analysis = analyze_candidate(data, oracle_check=oracle_check, oracle_cap=oracle_cap)
    record = family_record(
        analysis,
        group_label(data.g0, catalogue),
        group_label(data.group, catalogue),
    )
    logger.info("analyzed %s in %s: K^2 = %d, basket %s", record.g0, record.g, record.k2, record.basket)
    return record


def analyze_file(
    path: Union[Path, str],
    catalogue: Optional[Catalogue] = None,
    oracle_check: bool = False,
    oracle_cap: Optional[int] = None,
) -> FamilyRecordModel:
    return analyze(load_analyze_input(path), catalogue, oracle_check, oracle_cap)
