"""Configuration management for mixedsurf."""
from __future__ import annotations


from .settings import (
    GROUP_ORDER_CAP,
    LogLevel,
    OutputFormat,
    Settings,
    get_settings,
    reload_settings,
)

__all__ = [
    "GROUP_ORDER_CAP",
    "LogLevel",
    "OutputFormat",
    "Settings",
    "get_settings",
    "reload_settings",
]
