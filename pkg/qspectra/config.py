"""
Configuration.

Settings come from environment variables, optionally loaded from a `.env`
file in the working directory.
"""

import logging
import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from qspectra.errors import ConfigError

logger = logging.getLogger(__name__)

load_dotenv()

DEFAULT_TOL = 1e-12
DEFAULT_MAX_SWEEPS = 100
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseModel):
    """Process-wide defaults; command-line options override them."""
    cache_path: Optional[str] = None
    tol: float = Field(default=DEFAULT_TOL, gt=0)
    jobs: int = Field(default=1, ge=1)
    log_level: str = "INFO"

    @field_validator("log_level")
    @classmethod
    def known_level(cls, value):
        value = value.upper()
        if value not in LOG_LEVELS:
            raise ValueError(f"unknown log level {value!r}")
        return value


def get_settings():
    """
    Build Settings from the environment.

    Returns:
        Settings

    Raises:
        ConfigError: if a variable holds an invalid value
    """
    raw = {
        "cache_path": os.environ.get("QSPECTRA_CACHE") or None,
        "tol": os.environ.get("QSPECTRA_TOL", DEFAULT_TOL),
        "jobs": os.environ.get("QSPECTRA_JOBS", 1),
        "log_level": os.environ.get("QSPECTRA_LOG_LEVEL", "INFO"),
    }
    try:
        settings = Settings(**raw)
    except ValidationError as e:
        logger.error(f"Invalid environment configuration: {str(e)}")
        raise ConfigError(f"invalid environment configuration: {e}") from e

    if settings.cache_path:
        logger.debug(f"Spectral cache configured at {settings.cache_path}")
    return settings
