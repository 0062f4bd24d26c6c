"""The finite search frontier: baskets and signatures."""
from __future__ import annotations

from .baskets import candidate_classes, enumerate_baskets, target_B
from .signatures import (
    SearchBranch,
    enumerate_signatures,
    parse_signature,
    signature_text,
    theta,
)

__all__ = [
    "SearchBranch",
    "candidate_classes",
    "enumerate_baskets",
    "enumerate_signatures",
    "parse_signature",
    "signature_text",
    "target_B",
    "theta",
]
