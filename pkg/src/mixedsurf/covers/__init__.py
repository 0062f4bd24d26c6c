"""Branched covers of curves: generating vectors and Hurwitz orbits."""
from __future__ import annotations

from .hurwitz import HurwitzOrbit, hurwitz_equivalent, hurwitz_reduce, orbit
from .vectors import (
    GeneratingVector,
    enumerate_generating_vectors,
    genus_of_cover,
    relation_product,
    vector_from_entries,
)

__all__ = [
    "GeneratingVector",
    "HurwitzOrbit",
    "enumerate_generating_vectors",
    "genus_of_cover",
    "hurwitz_equivalent",
    "hurwitz_reduce",
    "orbit",
    "relation_product",
    "vector_from_entries",
]
