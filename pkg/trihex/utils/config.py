"""
Run configuration for trihex.

A plain dataclass with literal defaults; the command line is the only
override path (no environment variables are read).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, fields
from typing import Any, Dict, Optional

from trihex.utils.error_handler import ConfigurationError

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
LOG_FORMATS = ("console", "json")


@dataclass
class Config:
    """Configuration settings for a trihex run."""

    # Logging --------------------------------------------------------------
    log_level: str = "WARNING"
    log_format: str = "console"
    log_file: Optional[str] = None

    # Census / verification ------------------------------------------------
    workers: int = 1
    verify_vmax: int = 48
    stats_places: int = 3

    # Rendering ------------------------------------------------------------
    svg_canvas: float = 640.0
    svg_hex_radius: float = 18.0
    tutte_tolerance: float = 1e-9

    def __post_init__(self) -> None:
        self._validate()
        self._log_summary()

    # ------------------------------------------------------------------ utils
    def _validate(self) -> None:
        """Validate numeric ranges and basic invariants."""
        if self.log_level.upper() not in LOG_LEVELS:
            raise ConfigurationError(f"log_level must be one of {', '.join(LOG_LEVELS)}. Got {self.log_level}.")
        if self.log_format not in LOG_FORMATS:
            raise ConfigurationError(f"log_format must be 'console' or 'json'. Got {self.log_format}.")
        if self.workers < 1:
            raise ConfigurationError("workers must be at least 1.", workers=self.workers)
        if self.verify_vmax < 4:
            raise ConfigurationError("verify_vmax must be at least 4.", verify_vmax=self.verify_vmax)
        if not 0 <= self.stats_places <= 12:
            raise ConfigurationError("stats_places must be between 0 and 12.", stats_places=self.stats_places)
        if self.svg_canvas <= 0 or self.svg_hex_radius <= 0:
            raise ConfigurationError("SVG dimensions must be positive.")
        if not 0 < self.tutte_tolerance < 1:
            raise ConfigurationError("tutte_tolerance must lie in (0, 1).", tutte_tolerance=self.tutte_tolerance)

    def _log_summary(self) -> None:
        logger.debug(
            "trihex configuration: log_level=%s workers=%s verify_vmax=%s",
            self.log_level,
            self.workers,
            self.verify_vmax,
        )

    # ----------------------------------------------------------------- helpers
    def to_dict(self) -> Dict[str, Any]:
        """Export configuration details as a dictionary."""
        return {item.name: getattr(self, item.name) for item in fields(self)}


def load_config(**overrides: Any) -> Config:
    """Build a Config, ignoring overrides that were left unset (None)."""
    return Config(**{key: value for key, value in overrides.items() if value is not None})
