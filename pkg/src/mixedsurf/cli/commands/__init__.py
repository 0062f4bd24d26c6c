"""CLI commands package."""
from __future__ import annotations
