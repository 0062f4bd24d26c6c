"""Finite groups: table arithmetic, isomorphism, named groups and catalogues."""
from __future__ import annotations

from .builder import KNOWN_GROUP_COUNTS, build_catalogue, cyclic_extensions
from .catalogue import (
    Catalogue,
    CatalogueEntry,
    groups_of_order,
    load_catalogue,
    load_packaged_catalogue,
    resolve_catalogue,
    save_catalogue,
    validate_catalogue,
)
from .core import (
    FiniteGroup,
    GroupMap,
    Subgroup,
    build_group,
    conjugation_map,
    coset_index,
    direct_product,
    element_order,
    from_table,
    generated_subgroup,
    left_cosets,
    validate_group,
)
from .enumerate import enumerate_small_groups
from .isomorphism import AutomorphismCapExceeded, automorphisms, find_isomorphism, fingerprint, is_isomorphic
from .named import NamedGroupDescriptor, construct_named, parse_descriptor
from .naming import name_group

__all__ = [
    "AutomorphismCapExceeded",
    "Catalogue",
    "CatalogueEntry",
    "FiniteGroup",
    "GroupMap",
    "KNOWN_GROUP_COUNTS",
    "NamedGroupDescriptor",
    "Subgroup",
    "automorphisms",
    "build_catalogue",
    "build_group",
    "conjugation_map",
    "coset_index",
    "construct_named",
    "cyclic_extensions",
    "direct_product",
    "element_order",
    "enumerate_small_groups",
    "find_isomorphism",
    "fingerprint",
    "from_table",
    "generated_subgroup",
    "groups_of_order",
    "is_isomorphic",
    "left_cosets",
    "load_catalogue",
    "load_packaged_catalogue",
    "name_group",
    "parse_descriptor",
    "resolve_catalogue",
    "save_catalogue",
    "validate_catalogue",
    "validate_group",
]
