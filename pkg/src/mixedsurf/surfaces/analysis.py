"""Full analysis of one candidate."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from mixedsurf.singularities import Basket

from .albanese import AlbaneseData, albanese_genus
from .data import MixedData
from .invariants import SurfaceInvariants, surface_invariants
from .singular import YPoint, assemble_basket_X, compare_with_oracle, singular_points_Y


@dataclass(frozen=True)
class CandidateAnalysis:
    data: MixedData
    points: tuple[YPoint, ...]
    basket: Basket
    invariants: SurfaceInvariants
    albanese: Optional[AlbaneseData] = None


def analyze_candidate(
    data: MixedData, oracle_check: bool = False, oracle_cap: Optional[int] = None
) -> CandidateAnalysis:
    """Singular points, basket, invariants and, for q = 1, the Albanese data."""
    points = compare_with_oracle(data, oracle_cap) if oracle_check else singular_points_Y(data)
    basket = assemble_basket_X(data, points)
    invariants = surface_invariants(data, basket)
    albanese = albanese_genus(data) if data.q == 1 else None
    return CandidateAnalysis(data, tuple(points), basket, invariants, albanese)
