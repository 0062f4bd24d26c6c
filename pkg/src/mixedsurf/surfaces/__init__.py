"""Singularities, invariants and Albanese data of mixed quasi-etale surfaces."""
from __future__ import annotations

from .albanese import AlbaneseData, albanese_genus, monodromy_image, twisted_union_size
from .analysis import CandidateAnalysis, analyze_candidate
from .data import MixedData
from .invariants import MINIMAL_EXCEPTION, SurfaceInvariants, minimality, surface_invariants
from .singular import (
    YPoint,
    assemble_basket_X,
    bruteforce_singularity_oracle,
    compare_with_oracle,
    fixed_point_test,
    singular_points_Y,
)

__all__ = [
    "MINIMAL_EXCEPTION",
    "AlbaneseData",
    "CandidateAnalysis",
    "MixedData",
    "SurfaceInvariants",
    "YPoint",
    "albanese_genus",
    "analyze_candidate",
    "assemble_basket_X",
    "bruteforce_singularity_oracle",
    "compare_with_oracle",
    "fixed_point_test",
    "minimality",
    "monodromy_image",
    "singular_points_Y",
    "surface_invariants",
    "twisted_union_size",
]
