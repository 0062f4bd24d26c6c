"""Cyclic quotient singularities and their involution quotients."""
from __future__ import annotations

from .basket import EMPTY_BASKET, Basket, parse_basket
from .classes import (
    DCase,
    DDescriptor,
    Flavor,
    ResolutionGraph,
    SingularityClass,
    d_admissibility_failures,
    d_group_descriptor,
    make_class,
    parse_class,
    resolution_graph,
)
from .hj import HJFraction, dual_residue, hj_evaluate, hj_expand

__all__ = [
    "EMPTY_BASKET",
    "Basket",
    "DCase",
    "DDescriptor",
    "Flavor",
    "HJFraction",
    "ResolutionGraph",
    "SingularityClass",
    "d_admissibility_failures",
    "d_group_descriptor",
    "dual_residue",
    "hj_evaluate",
    "hj_expand",
    "make_class",
    "parse_basket",
    "parse_class",
    "resolution_graph",
]
