"""Unsplit index-two extensions realizing mixed actions."""
from __future__ import annotations

from .unsplit import (
    MixedExtension,
    enumerate_unsplit_extensions,
    has_complement,
    index_two_subgroups,
    make_extension,
    mixed_action_data,
    unsplit_test,
)

__all__ = [
    "MixedExtension",
    "enumerate_unsplit_extensions",
    "has_complement",
    "index_two_subgroups",
    "make_extension",
    "mixed_action_data",
    "unsplit_test",
]
