"""mixedsurf settings using Pydantic."""

from __future__ import annotations

import json
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

GROUP_ORDER_CAP = 2048


class OutputFormat(str, Enum):
    """Table output formats."""
    TSV = "tsv"
    JSON = "json"


class LogLevel(str, Enum):
    """Logging levels accepted on the command line."""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"


class Settings(BaseSettings):
    """Application settings."""

    model_config = SettingsConfigDict(
        env_prefix="MIXEDSURF_",
        env_file=".env",
        extra="ignore",
    )

    # Paths
    home_dir: Path = Field(
        default_factory=lambda: Path.home() / ".mixedsurf",
        description="mixedsurf data directory",
    )

    # Database
    db_name: str = Field(default="mixedsurf.db", description="SQLite run store filename")

    # Catalogue
    catalogue_name: str = Field(
        default="catalogue.json",
        description="Catalogue file inside home_dir used when --catalogue is not given",
    )
    catalogue_build_max_order: int = Field(
        default=50,
        description="Largest order built by 'catalogue build' when --max-order is not given",
    )
    automorphism_cap: int = Field(
        default=250_000,
        description=(
            "Abandon automorphism enumeration (catalogue builder, vector equivalence) "
            "beyond this many maps"
        ),
    )

    # Search
    max_group_order: int = Field(
        default=GROUP_ORDER_CAP,
        description="Largest group order any closure may reach",
    )
    jobs: int = Field(default=1, description="Worker processes for classify")
    oracle_cap: int = Field(
        default=20_000,
        description="Largest |G0/K_i| x |G0/K_j| the brute-force singularity oracle materializes",
    )

    # Output
    output_format: OutputFormat = Field(
        default=OutputFormat.TSV,
        description="Default output format for tables",
    )
    log_level: LogLevel = Field(default=LogLevel.WARNING, description="Logging level")

    @property
    def db_path(self) -> Path:
        """Full path to the database file."""
        return self.home_dir / self.db_name

    @property
    def catalogue_path(self) -> Path:
        """Path of the user catalogue file."""
        return self.home_dir / self.catalogue_name

    @property
    def runs_dir(self) -> Path:
        """Directory for exported run tables."""
        return self.home_dir / "runs"

    @property
    def config_file(self) -> Path:
        """Path to user config file."""
        return self.home_dir / "config.json"

    def ensure_directories(self) -> None:
        """Create all necessary directories."""
        self.home_dir.mkdir(parents=True, exist_ok=True)
        self.runs_dir.mkdir(parents=True, exist_ok=True)

    def save_to_file(self) -> None:
        """Save current settings to config file."""
        self.ensure_directories()
        config_data = {
            "catalogue_name": self.catalogue_name,
            "catalogue_build_max_order": self.catalogue_build_max_order,
            "automorphism_cap": self.automorphism_cap,
            "max_group_order": self.max_group_order,
            "jobs": self.jobs,
            "oracle_cap": self.oracle_cap,
            "output_format": self.output_format.value,
            "log_level": self.log_level.value,
        }
        with open(self.config_file, "w") as f:
            json.dump(config_data, f, indent=2)

    @classmethod
    def load_from_file(cls, home_dir: Optional[Path] = None) -> "Settings":
        """Load settings from config file, merging with defaults."""
        import os

        if home_dir is None:
            env_home = os.environ.get("MIXEDSURF_HOME_DIR")
            if env_home:
                home_dir = Path(env_home)
            else:
                home_dir = Path.home() / ".mixedsurf"
        config_file = home_dir / "config.json"

        file_settings: Dict[str, Any] = {}
        if config_file.exists():
            with open(config_file) as f:
                file_settings = json.load(f)

        return cls(home_dir=home_dir, **file_settings)


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings.load_from_file()


def reload_settings() -> Settings:
    """Reload settings, clearing cache."""
    get_settings.cache_clear()
    return get_settings()
